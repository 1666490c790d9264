#include "sh1d/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <climits>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sh1d {

namespace {

namespace pt = boost::property_tree;

double deg2rad(double deg) { return deg * M_PI / 180.0; }

// Raw values with inline comments stripped and whitespace trimmed; the INI
// reader itself only handles whole-line comments.
std::string clean_value(const std::string& raw) {
    std::string s = raw;
    const std::size_t cut = s.find_first_of(";#");
    if (cut != std::string::npos) s.erase(cut);
    const std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const std::size_t last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::optional<double> to_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

std::optional<int> to_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos == s.size() && v >= INT_MIN && v <= INT_MAX) {
            return static_cast<int>(v);
        }
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

std::optional<bool> to_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "on") return true;
    if (s == "false" || s == "0" || s == "off") return false;
    return std::nullopt;
}

// Collects every missing required field and every unparseable value, so one
// error reports the whole configuration at once.
class ConfigReader {
  public:
    explicit ConfigReader(const pt::ptree& tree) : tree_(tree) {}

    std::optional<std::string> raw(const std::string& key) const {
        auto node = tree_.get_optional<std::string>(pt::ptree::path_type(key));
        if (!node) return std::nullopt;
        return clean_value(*node);
    }

    double require_double(const std::string& key) {
        auto s = raw(key);
        if (!s) {
            errors_.push_back("missing required field " + key);
            return 0.0;
        }
        auto v = to_double(*s);
        if (!v) {
            errors_.push_back("invalid number for " + key + ": '" + *s + "'");
            return 0.0;
        }
        return *v;
    }

    double get_double(const std::string& key, double fallback) {
        auto s = raw(key);
        if (!s) return fallback;
        auto v = to_double(*s);
        if (!v) {
            errors_.push_back("invalid number for " + key + ": '" + *s + "'");
            return fallback;
        }
        return *v;
    }

    int get_int(const std::string& key, int fallback) {
        auto s = raw(key);
        if (!s) return fallback;
        auto v = to_int(*s);
        if (!v) {
            errors_.push_back("invalid integer for " + key + ": '" + *s + "'");
            return fallback;
        }
        return *v;
    }

    bool get_bool(const std::string& key, bool fallback) {
        auto s = raw(key);
        if (!s) return fallback;
        auto v = to_bool(*s);
        if (!v) {
            errors_.push_back("invalid boolean for " + key + ": '" + *s +
                              "' (expected true/false)");
            return fallback;
        }
        return *v;
    }

    std::string get_string(const std::string& key, const std::string& fallback) const {
        auto s = raw(key);
        return s ? *s : fallback;
    }

    void add_error(const std::string& message) { errors_.push_back(message); }
    const std::vector<std::string>& errors() const { return errors_; }

  private:
    const pt::ptree& tree_;
    std::vector<std::string> errors_;
};

InitialShape parse_shape(const std::string& name, ConfigReader& reader) {
    if (name == "semicircle") return InitialShape::Semicircle;
    if (name == "parabola") return InitialShape::Parabola;
    if (name == "gaussian") return InitialShape::Gaussian;
    reader.add_error("unknown initial.shape '" + name +
                     "' (expected semicircle, parabola, or gaussian)");
    return InitialShape::Semicircle;
}

std::vector<double> parse_time_list(const std::string& csv, const std::string& key,
                                    ConfigReader& reader) {
    std::vector<double> times;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string cleaned = clean_value(item);
        if (cleaned.empty()) continue;
        auto v = to_double(cleaned);
        if (!v) {
            reader.add_error("invalid number in " + key + ": '" + cleaned + "'");
            continue;
        }
        times.push_back(*v);
    }
    return times;
}

}  // namespace

RunConfig load_config(const std::string& path) {
    pt::ptree tree;
    try {
        pt::read_ini(path, tree);
    } catch (const pt::ini_parser_error& e) {
        throw std::runtime_error("config: cannot read '" + path + "': " + e.what());
    }

    RunConfig cfg;
    ConfigReader reader(tree);

    cfg.physical.zeta0 = deg2rad(reader.require_double("physical.zeta0_deg"));
    cfg.physical.phi = deg2rad(reader.require_double("physical.phi_deg"));
    cfg.physical.delta = deg2rad(reader.require_double("physical.delta_deg"));
    cfg.physical.epsilon = reader.get_double("physical.epsilon", cfg.physical.epsilon);
    cfg.physical.chi = reader.get_double("physical.chi", cfg.physical.chi);
    cfg.physical.x_incl_end =
        reader.get_double("physical.x_incl_end", cfg.physical.x_incl_end);
    cfg.physical.x_trans_end =
        reader.get_double("physical.x_trans_end", cfg.physical.x_trans_end);
    cfg.physical.yb0 = reader.get_double("physical.yb0", cfg.physical.yb0);

    cfg.domain_length = reader.get_double("numerical.domain_length", cfg.domain_length);
    cfg.n_cells = reader.get_int("numerical.n_cells", cfg.n_cells);
    cfg.degree = reader.get_int("numerical.degree", cfg.degree);
    cfg.time.dt = reader.get_double("numerical.dt", cfg.time.dt);
    cfg.time.t_end = reader.get_double("numerical.t_end", cfg.time.t_end);
    cfg.time.adaptive = reader.get_bool("numerical.adaptive", cfg.time.adaptive);
    cfg.time.strict_cfl = reader.get_bool("numerical.strict_cfl", cfg.time.strict_cfl);
    cfg.limiter.gamma = reader.get_double("numerical.gamma", cfg.limiter.gamma);
    cfg.stopping.h_semi = reader.get_double("numerical.h_semi", cfg.stopping.h_semi);
    cfg.stopping.h_eps = reader.get_double("numerical.h_eps", cfg.stopping.h_eps);
    cfg.stopping.u_stop = reader.get_double("numerical.u_stop", cfg.stopping.u_stop);

    cfg.initial.shape = parse_shape(reader.get_string("initial.shape", "semicircle"), reader);
    cfg.initial.x0 = reader.get_double("initial.x0", cfg.initial.x0);
    cfg.initial.r0 = reader.get_double("initial.r0", cfg.initial.r0);
    cfg.initial.amplitude = reader.get_double("initial.amplitude", cfg.initial.amplitude);
    cfg.initial.base = reader.get_double("initial.base", cfg.initial.base);

    cfg.output.directory = reader.get_string("output.dir", cfg.output.directory);
    if (auto snap = reader.raw("output.snapshot_times")) {
        cfg.output.snapshot_times =
            parse_time_list(*snap, "output.snapshot_times", reader);
    } else {
        clip_snapshot_times(cfg);  // keep the stock times inside [0, t_end]
    }
    cfg.output.record_every =
        reader.get_int("output.record_every", cfg.output.record_every);

    if (!reader.errors().empty()) {
        std::string msg = "config: invalid configuration:";
        for (const auto& e : reader.errors()) msg += "\n  - " + e;
        throw std::runtime_error(msg);
    }
    validate(cfg);
    return cfg;
}

RunConfig case_preset(int case_number) {
    RunConfig cfg;
    switch (case_number) {
        case 1:
            cfg.physical.zeta0 = deg2rad(35.0);
            cfg.physical.phi = deg2rad(30.0);
            cfg.physical.delta = deg2rad(30.0);
            break;
        case 2:
            cfg.physical.zeta0 = deg2rad(35.0);
            cfg.physical.phi = deg2rad(30.0);
            cfg.physical.delta = deg2rad(23.0);
            break;
        case 3:
            cfg.physical.zeta0 = deg2rad(35.0);
            cfg.physical.phi = deg2rad(37.0);
            cfg.physical.delta = deg2rad(30.0);
            break;
        case 4:
            cfg.physical.zeta0 = deg2rad(40.0);
            cfg.physical.phi = deg2rad(30.0);
            cfg.physical.delta = deg2rad(30.0);
            break;
        default:
            throw std::runtime_error("case_preset: case number must be 1..4");
    }
    validate(cfg);
    return cfg;
}

void clip_snapshot_times(RunConfig& cfg) {
    auto& times = cfg.output.snapshot_times;
    times.erase(std::remove_if(times.begin(), times.end(),
                               [&](double t) { return t > cfg.time.t_end; }),
                times.end());
}

void validate(const RunConfig& cfg) {
    std::vector<std::string> errors;
    const auto& p = cfg.physical;
    if (!(p.delta >= 0.0 && p.delta <= p.phi && p.phi < M_PI / 2.0)) {
        errors.push_back("physical: angles must satisfy 0 <= delta <= phi < 90 deg");
    }
    if (p.epsilon <= 0.0) errors.push_back("physical.epsilon: must be positive");
    if (p.x_incl_end >= p.x_trans_end) {
        errors.push_back("physical: x_incl_end must be below x_trans_end");
    }
    if (cfg.domain_length <= 0.0) errors.push_back("numerical.domain_length: must be positive");
    if (cfg.n_cells < 3) errors.push_back("numerical.n_cells: need at least 3 cells");
    if (cfg.degree != 2) errors.push_back("numerical.degree: only degree 2 is supported");
    if (cfg.time.dt <= 0.0) errors.push_back("numerical.dt: must be positive");
    if (cfg.time.t_end < 0.0) errors.push_back("numerical.t_end: must be non-negative");
    if (cfg.limiter.gamma < 0.5 || cfg.limiter.gamma > 1.0) {
        errors.push_back("numerical.gamma: must lie in [0.5, 1]");
    }
    if (!(cfg.stopping.h_eps > 0.0 && cfg.stopping.h_eps < cfg.stopping.h_semi)) {
        errors.push_back("numerical: thresholds must satisfy 0 < h_eps < h_semi");
    }
    if (cfg.stopping.u_stop < 0.0) {
        errors.push_back("numerical.u_stop: must be non-negative");
    }
    if (cfg.output.record_every < 1) {
        errors.push_back("output.record_every: must be at least 1");
    }
    auto times = cfg.output.snapshot_times;
    if (!std::is_sorted(times.begin(), times.end())) {
        errors.push_back("output.snapshot_times: must be ascending");
    }
    for (double t : times) {
        if (t < 0.0 || t > cfg.time.t_end + 1e-12) {
            errors.push_back("output.snapshot_times: times must lie in [0, t_end]");
            break;
        }
    }
    if (!errors.empty()) {
        std::string msg = "config: invalid configuration:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw std::runtime_error(msg);
    }
}

}  // namespace sh1d
