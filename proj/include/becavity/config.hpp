#ifndef BECAVITY_CONFIG_HPP_
#define BECAVITY_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "becavity/params.hpp"

namespace becavity {

// Flat key = value configuration (UTF-8 text, '#' comments). Frequencies are
// entered in Hz (linear) and converted to angular exactly once when the
// typed objects are built. Unknown keys are rejected with nearest-key
// suggestions; every field left at its default is reported.
class Config {
  public:
    enum class Type { real, integer, boolean, text };

    struct Entry {
        std::string key;
        Type type;
        std::string default_value; // "" means computed from other fields
        std::string description;
    };

    Config(); // all defaults

    static Config load_file(const std::string& path, bool apply_env = true);
    static Config from_text(const std::string& text, bool apply_env = false);

    void set(const std::string& key, const std::string& value);
    bool is_set(const std::string& key) const; // explicitly set (file/env/set)

    double get_real(const std::string& key) const;
    std::uint64_t get_uint(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    const std::string& get_text(const std::string& key) const;

    // Keys never explicitly set, i.e. running on defaults.
    std::vector<std::string> defaulted_keys() const;

    // Canonical serialization: every key, sorted, full precision. Reloading
    // the output reproduces the identical config.
    std::string serialize() const;

    // FNV-1a 64-bit over the canonical serialization plus extra tokens
    // (seed, code version); used for content-addressed run ids.
    static std::string content_hash(const std::string& canonical);

    static const std::vector<Entry>& schema();
    static std::vector<std::string> nearest_keys(const std::string& key, std::size_t count = 3);

    // Typed views ------------------------------------------------------
    SystemParams system_params() const;
    ScanProtocol scan(const SystemParams& p) const;
    std::uint64_t seed() const { return get_uint("seed"); }

  private:
    std::map<std::string, std::string> values_;   // current value per key
    std::map<std::string, bool> explicitly_set_;
    void apply_environment();
    const Entry& entry(const std::string& key) const;
};

} // namespace becavity

#endif
