#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno::cli {

enum class Command { zeno_time, sweep_temperature, simulate_projective, weak_survival, verify_bath };

std::string to_string(Command c);

/// Invalid configuration. `key` is the offending config key / flag name.
class ConfigError : public InvalidArgument {
public:
    ConfigError(std::string key, const std::string& constraint);
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    long long count = 2;
    bool log = false;
};

/// Evaluates a grid spec. Endpoints are reproduced exactly.
std::vector<double> make_grid(const GridSpec& g);

/// Everything a subcommand may read. Optional fields have command-dependent
/// defaults that resolve() fills in.
struct RunConfig {
    Command command = Command::zeno_time;
    std::string out_path;  ///< empty: stdout
    unsigned threads = 1;

    double omega = 1.0;
    double g = 0.1;
    double temperature = 0.0;
    std::string mode = "derived";  ///< paper | derived | both
    long long n_measurements = 100;
    double gamma = 1.0;
    double ti = 0.0;
    double tf = 1.0;
    double tau = 3.14159265358979323846;
    double tau_m = 1.0;
    std::string method = "variance";  ///< variance | weak | thermal

    std::optional<double> grid_start;
    std::optional<double> grid_stop;
    std::optional<long long> grid_count;
    std::optional<bool> grid_log;

    std::optional<double> delta_e;
    std::optional<double> bandwidth;
    std::optional<double> coupling;

    /// Fills command-dependent defaults.
    void resolve();

    /// Checks every physical and structural invariant the command relies on.
    /// Throws ConfigError naming the key. Call after resolve().
    void validate() const;

    GridSpec grid() const;

    /// Resolved key/value pairs consumed by the command, in a fixed order,
    /// numbers formatted for round-trip.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

}  // namespace zeno::cli
