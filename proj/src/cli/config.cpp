#include "scissors/cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace scissors::cli {

namespace {

struct Entry {
    std::string value;
    int line = 0;  // 0 for command-line overrides
};

constexpr std::array<std::string_view, 17> kKnownKeys = {
    "scenario", "chi_a",     "chi_b",     "chi_c",     "epsilon", "alpha",
    "beta",     "gamma",     "cutoff",    "initial_n", "initial_m", "initial_l",
    "t_max",    "dt",        "out",       "w_count",   "sweep_chi",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key) {
    return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

std::map<std::string, Entry> read_document(std::string_view source) {
    std::map<std::string, Entry> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        const auto eol = source.find('\n', pos);
        std::string_view line =
            source.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? source.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no),
                              "expected `key = value`, got `" + std::string(line) + "`");
        }
        const std::string key{trim(line.substr(0, eq))};
        if (!is_known(key)) {
            throw ConfigError(key, "unknown key (line " + std::to_string(line_no) + ")");
        }
        if (entries.contains(key)) {
            throw ConfigError(key, "duplicate key (line " + std::to_string(line_no) + ")");
        }
        entries[key] = Entry{std::string(trim(line.substr(eq + 1))), line_no};
    }
    return entries;
}

// factor ('*'|'/' factor)*, factor = ['-'|'+'] (number | "pi")
std::optional<double> parse_real_expression(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        return std::nullopt;
    }
    double result = 1.0;
    char op = '*';
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find_first_of("*/", pos);
        std::string_view token = trim(text.substr(pos, end == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : end - pos));
        double sign = 1.0;
        if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
            sign = token.front() == '-' ? -1.0 : 1.0;
            token = trim(token.substr(1));
        }
        double value = 0.0;
        if (token == "pi") {
            value = std::numbers::pi;
        } else {
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                return std::nullopt;
            }
        }
        value *= sign;
        result = (op == '*') ? result * value : result / value;
        if (end == std::string_view::npos) {
            break;
        }
        op = text[end];
        pos = end + 1;
    }
    return result;
}

class Resolver {
public:
    explicit Resolver(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    bool has(const std::string& key) const { return entries_.contains(key); }

    const std::string& raw(const std::string& key) const { return entries_.at(key).value; }

    double real(const std::string& key, double fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const auto v = parse_real_expression(raw(key));
        if (!v || !std::isfinite(*v)) {
            throw ConfigError(key, "expected a real number, got `" + raw(key) + "`");
        }
        return *v;
    }

    Complex complex(const std::string& key, Complex fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const std::string_view text = trim(raw(key));
        if (!text.empty() && text.front() == '(') {
            const auto comma = text.find(',');
            if (text.back() == ')' && comma != std::string_view::npos) {
                const auto re = parse_real_expression(text.substr(1, comma - 1));
                const auto im =
                    parse_real_expression(text.substr(comma + 1, text.size() - comma - 2));
                if (re && im && std::isfinite(*re) && std::isfinite(*im)) {
                    return {*re, *im};
                }
            }
            throw ConfigError(key, "expected `(re, im)`, got `" + raw(key) + "`");
        }
        return {real(key, 0.0), 0.0};
    }

    int integer(const std::string& key, int fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const std::string_view text = trim(raw(key));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
            throw ConfigError(key, "expected an integer, got `" + raw(key) + "`");
        }
        return value;
    }

    std::vector<double> real_list(const std::string& key, std::vector<double> fallback) const {
        if (!has(key)) {
            return fallback;
        }
        std::vector<double> out;
        std::string_view text = raw(key);
        while (true) {
            const auto comma = text.find(',');
            const auto v = parse_real_expression(text.substr(0, comma));
            if (!v || !std::isfinite(*v)) {
                throw ConfigError(key, "expected a comma-separated list of reals, got `" +
                                           raw(key) + "`");
            }
            out.push_back(*v);
            if (comma == std::string_view::npos) {
                break;
            }
            text = text.substr(comma + 1);
        }
        return out;
    }

private:
    std::map<std::string, Entry> entries_;
};

void require_initial_in_subspace(const RunConfig& cfg) {
    const auto& s = cfg.initial_state;
    const std::array<std::pair<const char*, int>, 3> parts = {
        {{"initial_n", s.n}, {"initial_m", s.m}, {"initial_l", s.l}}};
    for (const auto& [key, value] : parts) {
        if (value > 1) {
            throw ConfigError(key, "scenario `" + std::string(scenario_name(cfg.scenario)) +
                                       "` compares against the qubit model, occupation must be "
                                       "0 or 1");
        }
    }
}

} // namespace

std::string_view scenario_name(Scenario s) {
    switch (s) {
    case Scenario::Undriven: return "undriven";
    case Scenario::Driven: return "driven";
    case Scenario::Compare: return "compare";
    case Scenario::Sweep: return "sweep";
    case Scenario::WTimes: return "w-times";
    }
    return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (Scenario s : {Scenario::Undriven, Scenario::Driven, Scenario::Compare, Scenario::Sweep,
                       Scenario::WTimes}) {
        if (scenario_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

RunConfig parse_config(std::string_view source, std::span<const ConfigOverride> overrides) {
    auto entries = read_document(source);
    for (const auto& o : overrides) {
        if (!is_known(o.key)) {
            throw ConfigError(o.key, "unknown key");
        }
        entries[o.key] = Entry{o.value, 0};
    }
    const Resolver r(std::move(entries));

    RunConfig cfg;
    if (!r.has("scenario")) {
        throw ConfigError("scenario", "no scenario given");
    }
    const auto scenario = parse_scenario(trim(r.raw("scenario")));
    if (!scenario) {
        throw ConfigError("scenario", "unknown scenario `" + r.raw("scenario") +
                                          "` (expected undriven, driven, compare, sweep or "
                                          "w-times)");
    }
    cfg.scenario = *scenario;

    SystemParams& p = cfg.params;
    p.chi_a = r.real("chi_a", p.chi_a);
    p.chi_b = r.real("chi_b", p.chi_b);
    p.chi_c = r.real("chi_c", p.chi_c);
    p.epsilon = Complex{r.real("epsilon", p.epsilon.real()), 0.0};
    p.cutoff = r.integer("cutoff", p.cutoff);
    if (p.cutoff < 2 || p.cutoff > kMaxCutoff) {
        throw ConfigError("cutoff", "must lie in [2, " + std::to_string(kMaxCutoff) + "], got " +
                                        std::to_string(p.cutoff));
    }

    const bool drive_by_default =
        cfg.scenario == Scenario::Driven || cfg.scenario == Scenario::Sweep;
    const Complex default_drive = drive_by_default ? p.epsilon : Complex{};
    p.alpha = r.complex("alpha", default_drive);
    p.beta = r.complex("beta", default_drive);
    p.gamma = r.complex("gamma", default_drive);
    if (cfg.scenario == Scenario::Undriven || cfg.scenario == Scenario::WTimes) {
        for (const auto& [key, value] :
             {std::pair{"alpha", p.alpha}, std::pair{"beta", p.beta}, std::pair{"gamma", p.gamma}}) {
            if (value != Complex{}) {
                throw ConfigError(key, "scenario `" + std::string(scenario_name(cfg.scenario)) +
                                           "` requires zero drive");
            }
        }
    }

    const FockIndex default_initial = p.driven() ? FockIndex{0, 0, 0} : FockIndex{0, 0, 1};
    cfg.initial_state = FockIndex{r.integer("initial_n", default_initial.n),
                                  r.integer("initial_m", default_initial.m),
                                  r.integer("initial_l", default_initial.l)};
    const std::array<std::pair<const char*, int>, 3> parts = {{{"initial_n", cfg.initial_state.n},
                                                                {"initial_m", cfg.initial_state.m},
                                                                {"initial_l", cfg.initial_state.l}}};
    for (const auto& [key, value] : parts) {
        if (value < 0 || value >= p.cutoff) {
            throw ConfigError(key, "occupation " + std::to_string(value) + " outside cutoff " +
                                       std::to_string(p.cutoff));
        }
    }
    if (cfg.scenario == Scenario::Compare || cfg.scenario == Scenario::Sweep) {
        require_initial_in_subspace(cfg);
    }

    cfg.t_max = r.real("t_max", cfg.t_max);
    if (cfg.t_max < 0.0) {
        throw ConfigError("t_max", "must be >= 0");
    }
    cfg.dt = r.real("dt", cfg.dt);
    if (!(cfg.dt > 0.0)) {
        throw ConfigError("dt", "must be > 0");
    }

    cfg.w_count = r.integer("w_count", cfg.w_count);
    if (cfg.w_count < 1) {
        throw ConfigError("w_count", "must be >= 1");
    }
    if (cfg.scenario == Scenario::WTimes && !(p.epsilon.real() > 0.0)) {
        throw ConfigError("epsilon", "w-times requires epsilon > 0");
    }

    cfg.sweep_chi = r.real_list("sweep_chi", cfg.sweep_chi);

    if (r.has("out")) {
        cfg.output_path = r.raw("out");
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path,
                      std::span<const ConfigOverride> overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading config file " + path.string());
    }
    return parse_config(buffer.str(), overrides);
}

} // namespace scissors::cli
