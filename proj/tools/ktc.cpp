// Batch front door: define systems, points, and analyses in a JSON config,
// run them deterministically, and emit a machine-readable report.
//
// Exit codes: 0 success, 1 configuration error, 2 internal invariant
// violation (including any refuted case from a theorem suite).

#include "ktc/analysis.hpp"
#include "ktc/harness.hpp"
#include "ktc/report.hpp"
#include "ktc/system.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using ktc::Json;

/// Configuration problem: reported on stderr, exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Command-line values that win over config-file values.
struct Overrides {
    std::optional<int> k;
    std::optional<int> window;
    std::optional<std::uint64_t> seed;
    std::string out;  // empty: config "out", else stdout
};

// ---- JSON field access with path-tagged diagnostics ----

const Json& require_key(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(where + ": missing key \"" + key + "\"");
    }
    return j.at(key);
}

std::string require_string(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = require_key(j, key, where);
    if (!v.is_string()) throw ConfigError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

int require_int(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = require_key(j, key, where);
    if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
    const long long raw = v.get<long long>();
    if (raw < -1000000000LL || raw > 1000000000LL) {
        throw ConfigError(where + "." + key + ": out of range");
    }
    return static_cast<int>(raw);
}

int optional_int(const Json& j, const std::string& key, int fallback, const std::string& where) {
    return j.is_object() && j.contains(key) ? require_int(j, key, where) : fallback;
}

double require_double(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = require_key(j, key, where);
    if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return v.get<double>();
}

ktc::Int parse_int_value(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return ktc::Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return ktc::Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw ConfigError(where + ": bad integer \"" + v.get<std::string>() + "\"");
        }
    }
    throw ConfigError(where + ": expected an integer (number or decimal string)");
}

ktc::Rational parse_rational_value(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return ktc::Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return ktc::Rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw ConfigError(where + ": bad rational \"" + v.get<std::string>() + "\"");
        }
    }
    throw ConfigError(where + ": expected an integer or a \"p/q\" string");
}

std::vector<int> parse_int_list(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError(where + ": expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string path = where + "[" + std::to_string(i) + "]";
        if (!v[i].is_number_integer()) throw ConfigError(path + ": expected an integer");
        const long long raw = v[i].get<long long>();
        if (raw < -1000000000LL || raw > 1000000000LL) throw ConfigError(path + ": out of range");
        out.push_back(static_cast<int>(raw));
    }
    return out;
}

ktc::LatticeVector parse_vector(const Json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw ConfigError(where + ": expected a nonempty array");
    std::vector<ktc::Int> coords;
    for (std::size_t i = 0; i < v.size(); ++i) {
        coords.push_back(parse_int_value(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return ktc::LatticeVector(std::move(coords));
}

ktc::LinearForm parse_form(const Json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw ConfigError(where + ": expected a nonempty array");
    std::vector<ktc::Int> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        coeffs.push_back(parse_int_value(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return ktc::LinearForm(std::move(coeffs));
}

ktc::LinearForm parse_form_text(const std::string& text) {
    std::vector<ktc::Int> coeffs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw ConfigError("form: empty component in \"" + text + "\"");
        try {
            coeffs.emplace_back(token.substr(b, e - b + 1));
        } catch (const std::exception&) {
            throw ConfigError("form: bad integer \"" + token + "\"");
        }
    }
    if (coeffs.empty()) throw ConfigError("form: expected comma-separated integers");
    return ktc::LinearForm(std::move(coeffs));
}

Json form_json(const ktc::LinearForm& h) {
    Json arr = Json::array();
    for (int i = 0; i < h.dim(); ++i) arr.push_back(ktc::int_json(h[i]));
    return arr;
}

ktc::ConeIndex make_cone(int k, int dim) {
    if (dim < 1 || dim > 30) throw ConfigError("cone dimension out of range 1..30");
    const long long count = 1LL << dim;
    if (k < 1 || k > count) throw ConfigError("k out of range 1.." + std::to_string(count));
    return ktc::ConeIndex(k, dim);
}

// ---- config-file definitions ----

struct Definitions {
    std::map<std::string, ktc::SystemHandle> systems;
    std::map<std::string, ktc::Point> points;

    const ktc::SystemHandle& system(const std::string& id) const {
        const auto it = systems.find(id);
        if (it == systems.end()) throw ConfigError("unknown system id \"" + id + "\"");
        return it->second;
    }
    const ktc::Point& point(const std::string& id) const {
        const auto it = points.find(id);
        if (it == points.end()) throw ConfigError("unknown point id \"" + id + "\"");
        return it->second;
    }
};

ktc::SystemHandle build_system(const Json& js, const Definitions& defs, const std::string& where) {
    const std::string kind = require_string(js, "kind", where);
    if (kind == "shift") {
        return ktc::make_shift(require_int(js, "dim", where), require_int(js, "alphabet", where));
    }
    if (kind == "rotation") {
        return ktc::make_rotation_induced(require_double(js, "alpha", where),
                                          parse_form(require_key(js, "h", where), where + ".h"));
    }
    if (kind == "finite") {
        const int size = require_int(js, "size", where);
        const Json& metric = require_key(js, "metric", where);
        const std::size_t want = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
        if (!metric.is_array() || metric.size() != want) {
            throw ConfigError(where + ".metric: expected a row-major array of " +
                              std::to_string(want) + " entries");
        }
        std::vector<ktc::Rational> table;
        for (std::size_t i = 0; i < metric.size(); ++i) {
            table.push_back(
                parse_rational_value(metric[i], where + ".metric[" + std::to_string(i) + "]"));
        }
        const Json& gens = require_key(js, "generators", where);
        if (!gens.is_array() || gens.empty()) {
            throw ConfigError(where + ".generators: expected a nonempty array");
        }
        std::vector<ktc::Permutation> perms;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            perms.emplace_back(
                parse_int_list(gens[i], where + ".generators[" + std::to_string(i) + "]"));
        }
        return ktc::make_finite(ktc::FiniteSpace(size, std::move(table)), std::move(perms));
    }
    if (kind == "product") {
        return ktc::make_product(defs.system(require_string(js, "first", where)),
                                 defs.system(require_string(js, "second", where)));
    }
    if (kind == "induced") {
        const ktc::LinearForm h = parse_form(require_key(js, "h", where), where + ".h");
        return ktc::make_induced(defs.system(require_string(js, "base", where)), h, h.dim());
    }
    if (kind == "conjugate-swap") {
        const ktc::PointMap swap = [](const ktc::Point& p) { return ktc::symbol_swap(p); };
        return ktc::make_conjugate(defs.system(require_string(js, "base", where)), swap, swap);
    }
    throw ConfigError(where + ": unknown system kind \"" + kind +
                      "\" (shift, rotation, finite, product, induced, conjugate-swap)");
}

ktc::Point build_point(const Json& jp, const Definitions& defs, const std::string& where) {
    const std::string kind = require_string(jp, "kind", where);
    if (kind == "uniform") {
        return ktc::Point::config(ktc::SymbolicConfig::uniform(require_int(jp, "dim", where),
                                                               require_int(jp, "alphabet", where),
                                                               require_int(jp, "symbol", where)));
    }
    if (kind == "config") {
        const int alphabet = require_int(jp, "alphabet", where);
        std::vector<int> period =
            parse_int_list(require_key(jp, "period", where), where + ".period");
        std::vector<int> background =
            parse_int_list(require_key(jp, "background", where), where + ".background");
        std::map<ktc::LatticeVector, int> defects;
        if (jp.contains("defects")) {
            const Json& arr = jp.at("defects");
            if (!arr.is_array()) throw ConfigError(where + ".defects: expected an array");
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const std::string dw = where + ".defects[" + std::to_string(i) + "]";
                const ktc::LatticeVector cell =
                    parse_vector(require_key(arr[i], "cell", dw), dw + ".cell");
                defects[cell] = require_int(arr[i], "symbol", dw);
            }
        }
        std::optional<ktc::BlockFamily> block;
        if (jp.contains("block")) {
            const Json& b = jp.at("block");
            const std::string bw = where + ".block";
            ktc::LatticeVector dir = parse_vector(require_key(b, "direction", bw), bw + ".direction");
            const int dim = dir.dim();
            block = ktc::BlockFamily{std::move(dir), ktc::Int(optional_int(b, "base", 2, bw)),
                                     require_int(b, "symbol", bw), ktc::LatticeVector::zero(dim)};
        }
        return ktc::Point::config(ktc::SymbolicConfig(alphabet, std::move(period),
                                                      std::move(background), std::move(defects),
                                                      std::move(block)));
    }
    if (kind == "finite") return ktc::Point::finite(require_int(jp, "index", where));
    if (kind == "circle") {
        return ktc::Point::circle(ktc::CirclePoint::wrap(require_double(jp, "angle", where)));
    }
    if (kind == "product") {
        return ktc::Point::product(defs.point(require_string(jp, "first", where)),
                                   defs.point(require_string(jp, "second", where)));
    }
    throw ConfigError(where + ": unknown point kind \"" + kind +
                      "\" (uniform, config, finite, circle, product)");
}

/// Systems and points may only reference ids defined earlier in the file.
Definitions build_definitions(const Json& cfg) {
    Definitions defs;
    if (cfg.contains("systems")) {
        const Json& arr = cfg.at("systems");
        if (!arr.is_array()) throw ConfigError("systems: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "systems[" + std::to_string(i) + "]";
            const std::string id = require_string(arr[i], "id", where);
            if (defs.systems.count(id)) {
                throw ConfigError(where + ": duplicate system id \"" + id + "\"");
            }
            defs.systems.emplace(id, build_system(arr[i], defs, where));
        }
    }
    if (cfg.contains("points")) {
        const Json& arr = cfg.at("points");
        if (!arr.is_array()) throw ConfigError("points: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "points[" + std::to_string(i) + "]";
            const std::string id = require_string(arr[i], "id", where);
            if (defs.points.count(id)) {
                throw ConfigError(where + ": duplicate point id \"" + id + "\"");
            }
            defs.points.emplace(id, build_point(arr[i], defs, where));
        }
    }
    return defs;
}

ktc::AnalysisConfig merge_analysis_config(ktc::AnalysisConfig base, const Json& j,
                                          const std::string& where) {
    if (!j.is_object()) return base;
    if (j.contains("window")) base.window = require_int(j, "window", where);
    if (j.contains("seed")) {
        const Json& s = j.at("seed");
        if (!s.is_number_integer()) throw ConfigError(where + ".seed: expected an integer");
        base.seed = s.get<std::uint64_t>();
    }
    if (j.contains("samples")) base.sample_count = require_int(j, "samples", where);
    if (j.contains("delta")) base.delta = parse_rational_value(j.at("delta"), where + ".delta");
    if (j.contains("eps_grid")) {
        const Json& g = j.at("eps_grid");
        if (!g.is_array() || g.empty()) {
            throw ConfigError(where + ".eps_grid: expected a nonempty array");
        }
        base.eps_grid.clear();
        for (std::size_t i = 0; i < g.size(); ++i) {
            base.eps_grid.push_back(
                parse_rational_value(g[i], where + ".eps_grid[" + std::to_string(i) + "]"));
        }
    }
    return base;
}

ktc::AnalysisConfig apply_overrides(ktc::AnalysisConfig c, const Overrides& ov) {
    if (ov.window) c.window = *ov.window;
    if (ov.seed) c.seed = *ov.seed;
    return c;
}

// ---- IO ----

Json load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file \"" + path + "\"");
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file \"" + path + "\"");
    f << text;
    if (!f) throw ConfigError("failed writing \"" + path + "\"");
}

std::string pick_out(const Overrides& ov, const Json& cfg) {
    if (!ov.out.empty()) return ov.out;
    if (cfg.is_object() && cfg.contains("out")) {
        if (!cfg.at("out").is_string()) throw ConfigError("out: expected a string path");
        return cfg.at("out").get<std::string>();
    }
    return "";
}

void emit_report(const Json& report, const std::string& out_path) {
    ktc::validate_report(report);
    const std::string text = ktc::render_report(report);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

// ---- analyses ----

constexpr double kDefaultAlpha = 0.6180339887498949;  // golden-ratio rotation angle

Json cone_unit_json(const ktc::ConeUnitSearch& s) {
    Json j = Json::object();
    j["solution"] = s.solution ? ktc::lattice_vector_json(*s.solution) : Json(nullptr);
    j["searched_bound"] = s.searched_bound;
    return j;
}

std::vector<ktc::TheoremCase> run_suite(const std::string& suite, const ktc::LinearForm& h,
                                        int k, const ktc::AnalysisConfig& acfg) {
    using namespace ktc;
    if (suite == "standard") return standard_battery(acfg);
    if (suite == "dichotomy") return dichotomy_suite(acfg);
    if (suite == "induced") {
        return induced_suite(make_shift(1, 2), h, make_cone(k, h.dim()), acfg);
    }
    if (suite == "product") {
        return product_suite(make_shift(2, 2),
                             make_rotation_induced(kDefaultAlpha, LinearForm({Int(1), Int(1)})),
                             make_cone(k, 2), acfg);
    }
    if (suite == "conjugacy-swap") {
        const SystemHandle shift2 = make_shift(2, 2);
        const PointMap swap = [](const Point& p) { return symbol_swap(p); };
        auto cases = conjugacy_suite(shift2, shift2, swap, swap, make_cone(k, 2), acfg);
        auto wrapped = conjugacy_suite(shift2, make_conjugate(shift2, swap, swap), swap, swap,
                                       make_cone(k, 2), acfg);
        for (auto& c : wrapped) cases.push_back(std::move(c));
        return cases;
    }
    throw ConfigError("unknown theorem suite \"" + suite +
                      "\" (standard, conjugacy-swap, product, induced, dichotomy)");
}

Json theorems_json(const std::vector<ktc::TheoremCase>& cases, bool& saw_refuted) {
    int confirmed = 0, refuted = 0, inconclusive = 0;
    Json arr = Json::array();
    for (const auto& c : cases) {
        arr.push_back(ktc::theorem_case_json(c));
        switch (c.status) {
            case ktc::CaseStatus::confirmed: ++confirmed; break;
            case ktc::CaseStatus::refuted: ++refuted; break;
            case ktc::CaseStatus::inconclusive: ++inconclusive; break;
        }
    }
    if (refuted > 0) saw_refuted = true;
    Json counts = Json::object();
    counts["confirmed"] = confirmed;
    counts["refuted"] = refuted;
    counts["inconclusive"] = inconclusive;
    Json out = Json::object();
    out["counts"] = std::move(counts);
    out["cases"] = std::move(arr);
    return out;
}

Json execute_entry(const Json& entry, const Definitions& defs,
                   const ktc::AnalysisConfig& base_cfg, const Overrides& ov, std::size_t index,
                   bool& saw_refuted) {
    using namespace ktc;
    const std::string where = "analyses[" + std::to_string(index) + "]";
    if (!entry.is_object()) throw ConfigError(where + ": expected an object");
    const std::string name = require_string(entry, "analysis", where);
    AnalysisConfig acfg = apply_overrides(merge_analysis_config(base_cfg, entry, where), ov);
    acfg.validate();

    const auto system_of = [&]() -> const SystemHandle& {
        return defs.system(require_string(entry, "system", where));
    };
    const auto point_of = [&](const char* key) -> const Point& {
        return defs.point(require_string(entry, key, where));
    };
    const auto cone_of = [&](int dim) {
        return make_cone(ov.k ? *ov.k : optional_int(entry, "k", 1, where), dim);
    };

    Json result = entry;  // echo the request next to its output
    if (name == "classify-pair") {
        const auto& sys = system_of();
        const Point& x = point_of("x");
        const Point& y = point_of("y");
        const ConeIndex k = cone_of(sys->dimension());
        result["output"] = pair_class_json(classify_pair(*sys, x, y, k, acfg));
        if (entry.contains("profile_csv")) {
            const std::string path = require_string(entry, "profile_csv", where);
            const auto prof = distance_profile(*sys, x, y, k, acfg.window);
            write_file(path, profile_csv(prof, sys->dimension()));
        }
    } else if (name == "sensitivity") {
        const auto& sys = system_of();
        result["output"] = verdict_json(sensitivity_check(*sys, cone_of(sys->dimension()), acfg));
    } else if (name == "transitivity") {
        const auto& sys = system_of();
        result["output"] = verdict_json(transitivity_check(*sys, cone_of(sys->dimension()), acfg));
    } else if (name == "li-yorke-sensitivity") {
        const auto& sys = system_of();
        result["output"] =
            verdict_json(li_yorke_sensitivity_check(*sys, cone_of(sys->dimension()), acfg));
    } else if (name == "equicontinuity") {
        result["output"] =
            verdict_json(equicontinuity_point_check(*system_of(), point_of("x"), acfg));
    } else if (name == "gl-membership") {
        result["output"] = verdict_json(
            gl_membership(*system_of(), point_of("x"), require_int(entry, "l", where), acfg));
    } else if (name == "scrambled-set") {
        const auto& sys = system_of();
        const Json& ids = require_key(entry, "points", where);
        if (!ids.is_array()) throw ConfigError(where + ".points: expected an array of point ids");
        std::vector<Point> pts;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (!ids[i].is_string()) {
                throw ConfigError(where + ".points[" + std::to_string(i) +
                                  "]: expected a point id");
            }
            pts.push_back(defs.point(ids[i].get<std::string>()));
        }
        result["output"] =
            verdict_json(scrambled_set_check(*sys, pts, cone_of(sys->dimension()), acfg));
    } else if (name == "limit-set" || name == "prolongation-set") {
        const auto& sys = system_of();
        const ConeIndex k = cone_of(sys->dimension());
        const auto pts = name == "limit-set" ? limit_set_finite(*sys, point_of("x"), k)
                                             : prolongation_set_finite(*sys, point_of("x"), k);
        Json arr = Json::array();
        for (const auto& p : pts) arr.push_back(p.to_string());
        Json out = Json::object();
        out["count"] = arr.size();
        out["points"] = std::move(arr);
        result["output"] = std::move(out);
    } else if (name == "dichotomy") {
        const auto& sys = system_of();
        result["output"] = dichotomy_json(dichotomy_report(*sys, cone_of(sys->dimension()), acfg));
    } else if (name == "cone-unit") {
        const LinearForm h = parse_form(require_key(entry, "h", where), where + ".h");
        const ConeIndex k = cone_of(h.dim());
        result["output"] =
            cone_unit_json(solve_cone_unit(h, k, optional_int(entry, "bound", 10, where)));
    } else if (name == "theorems") {
        const std::string suite =
            entry.contains("suite") ? require_string(entry, "suite", where) : "standard";
        const LinearForm h = entry.contains("h")
                                 ? parse_form(entry.at("h"), where + ".h")
                                 : LinearForm({Int(2), Int(-1)});
        const int k = ov.k ? *ov.k : optional_int(entry, "k", 1, where);
        result["output"] = theorems_json(run_suite(suite, h, k, acfg), saw_refuted);
    } else {
        throw ConfigError(where + ": unknown analysis \"" + name + "\"");
    }
    return result;
}

// ---- subcommand drivers ----

int do_run(const std::string& config_path, const Overrides& ov) {
    const Json cfg = load_config(config_path);
    const Definitions defs = build_definitions(cfg);
    const ktc::AnalysisConfig base = merge_analysis_config(ktc::AnalysisConfig{}, cfg, "config");
    const Json& analyses = require_key(cfg, "analyses", "config");
    if (!analyses.is_array()) throw ConfigError("analyses: expected an array");
    bool saw_refuted = false;
    Json results = Json::array();
    for (std::size_t i = 0; i < analyses.size(); ++i) {
        results.push_back(execute_entry(analyses[i], defs, base, ov, i, saw_refuted));
    }
    emit_report(ktc::make_report(std::move(results)), pick_out(ov, cfg));
    if (saw_refuted) {
        std::cerr << "error: a theorem case was refuted; see the report\n";
        return 2;
    }
    return 0;
}

int do_classify_pair(const std::string& config_path, const std::string& system_id,
                     const std::string& x_id, const std::string& y_id, const Overrides& ov,
                     const std::string& csv_path) {
    const Json cfg = load_config(config_path);
    const Definitions defs = build_definitions(cfg);
    ktc::AnalysisConfig acfg =
        apply_overrides(merge_analysis_config(ktc::AnalysisConfig{}, cfg, "config"), ov);
    acfg.validate();
    const auto& sys = defs.system(system_id);
    const ktc::Point& x = defs.point(x_id);
    const ktc::Point& y = defs.point(y_id);
    const ktc::ConeIndex k = make_cone(ov.k.value_or(1), sys->dimension());
    Json entry = Json::object();
    entry["analysis"] = "classify-pair";
    entry["system"] = system_id;
    entry["x"] = x_id;
    entry["y"] = y_id;
    entry["k"] = k.k;
    entry["output"] = ktc::pair_class_json(ktc::classify_pair(*sys, x, y, k, acfg));
    if (!csv_path.empty()) {
        const auto prof = ktc::distance_profile(*sys, x, y, k, acfg.window);
        write_file(csv_path, ktc::profile_csv(prof, sys->dimension()));
    }
    Json results = Json::array();
    results.push_back(std::move(entry));
    emit_report(ktc::make_report(std::move(results)), pick_out(ov, cfg));
    return 0;
}

int do_system_verdict(const std::string& analysis, const std::string& config_path,
                      const std::string& system_id, const Overrides& ov) {
    const Json cfg = load_config(config_path);
    const Definitions defs = build_definitions(cfg);
    ktc::AnalysisConfig acfg =
        apply_overrides(merge_analysis_config(ktc::AnalysisConfig{}, cfg, "config"), ov);
    acfg.validate();
    const auto& sys = defs.system(system_id);
    const ktc::ConeIndex k = make_cone(ov.k.value_or(1), sys->dimension());
    Json entry = Json::object();
    entry["analysis"] = analysis;
    entry["system"] = system_id;
    entry["k"] = k.k;
    if (analysis == "sensitivity") {
        entry["output"] = ktc::verdict_json(ktc::sensitivity_check(*sys, k, acfg));
    } else {
        entry["output"] = ktc::dichotomy_json(ktc::dichotomy_report(*sys, k, acfg));
    }
    Json results = Json::array();
    results.push_back(std::move(entry));
    emit_report(ktc::make_report(std::move(results)), pick_out(ov, cfg));
    return 0;
}

int do_cone_unit(const std::string& h_text, const Overrides& ov, int bound) {
    const ktc::LinearForm h = parse_form_text(h_text);
    const ktc::ConeIndex k = make_cone(ov.k.value_or(1), h.dim());
    Json entry = Json::object();
    entry["analysis"] = "cone-unit";
    entry["h"] = form_json(h);
    entry["k"] = k.k;
    entry["bound"] = bound;
    entry["output"] = cone_unit_json(ktc::solve_cone_unit(h, k, bound));
    Json results = Json::array();
    results.push_back(std::move(entry));
    emit_report(ktc::make_report(std::move(results)), ov.out);
    return 0;
}

int do_theorems(const std::string& suite, const std::string& h_text, const Overrides& ov) {
    ktc::AnalysisConfig acfg = apply_overrides(ktc::AnalysisConfig{}, ov);
    acfg.validate();
    const ktc::LinearForm h = parse_form_text(h_text);
    const int k = ov.k.value_or(1);
    bool saw_refuted = false;
    Json entry = Json::object();
    entry["analysis"] = "theorems";
    entry["suite"] = suite;
    if (suite == "induced") entry["h"] = form_json(h);
    entry["k"] = k;
    entry["output"] = theorems_json(run_suite(suite, h, k, acfg), saw_refuted);
    Json results = Json::array();
    results.push_back(std::move(entry));
    emit_report(ktc::make_report(std::move(results)), ov.out);
    if (saw_refuted) {
        std::cerr << "error: a theorem case was refuted; see the report\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cone-order analysis of Z^d actions: pair classification, sensitivity, "
                 "equicontinuity, transfer suites, JSON reports"};
    app.require_subcommand(1);

    Overrides ov;
    std::string config_path, system_id, x_id, y_id, csv_path;
    std::string suite = "standard";
    std::string h_text = "2,-1";
    int bound = 10;

    const auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--k", ov.k, "cone index (1..2^d)");
        cmd->add_option("--window", ov.window, "search window for bounded quantifiers");
        cmd->add_option("--seed", ov.seed, "sampling seed");
        cmd->add_option("--out", ov.out, "report path (default: config \"out\" or stdout)");
    };

    CLI::App* run = app.add_subcommand("run", "run every analysis in a JSON config");
    run->add_option("config", config_path, "JSON config path")->required();
    add_shared(run);

    CLI::App* cp = app.add_subcommand("classify-pair", "classify one pair from a config");
    cp->add_option("config", config_path, "JSON config path")->required();
    cp->add_option("--system", system_id, "system id")->required();
    cp->add_option("--x", x_id, "first point id")->required();
    cp->add_option("--y", y_id, "second point id")->required();
    cp->add_option("--profile-csv", csv_path, "also write the distance profile as CSV");
    add_shared(cp);

    CLI::App* sens = app.add_subcommand("sensitivity", "sensitivity of one system from a config");
    sens->add_option("config", config_path, "JSON config path")->required();
    sens->add_option("--system", system_id, "system id")->required();
    add_shared(sens);

    CLI::App* dich =
        app.add_subcommand("dichotomy", "transitivity, sensitivity, and equicontinuity together");
    dich->add_option("config", config_path, "JSON config path")->required();
    dich->add_option("--system", system_id, "system id")->required();
    add_shared(dich);

    CLI::App* cu = app.add_subcommand("cone-unit", "search m above 0 in the cone with r(m) = 1");
    cu->add_option("--form", h_text, "integer form h, comma separated (e.g. \"2,-1\")")->required();
    cu->add_option("--bound", bound, "max-norm search bound");
    add_shared(cu);

    CLI::App* th = app.add_subcommand("theorems", "run a transfer/invariance suite");
    th->add_option("--suite", suite, "standard, conjugacy-swap, product, induced, dichotomy");
    th->add_option("--form", h_text, "integer form h for the induced suite");
    add_shared(th);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return do_run(config_path, ov);
        if (cp->parsed()) return do_classify_pair(config_path, system_id, x_id, y_id, ov, csv_path);
        if (sens->parsed()) return do_system_verdict("sensitivity", config_path, system_id, ov);
        if (dich->parsed()) return do_system_verdict("dichotomy", config_path, system_id, ov);
        if (cu->parsed()) return do_cone_unit(h_text, ov, bound);
        if (th->parsed()) return do_theorems(suite, h_text, ov);
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
