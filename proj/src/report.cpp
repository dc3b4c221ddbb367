#include "ktc/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ktc {

namespace {

/// Base-2 exponent when the rational is exactly a power of two.
std::optional<long long> pow2_exponent(const Rational& r) {
    if (r <= 0) return std::nullopt;
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    long long e = 0;
    while (den % 2 == 0) {
        den /= 2;
        --e;
    }
    while (num % 2 == 0) {
        num /= 2;
        ++e;
    }
    if (num != 1 || den != 1) return std::nullopt;
    return e;
}

void require(bool ok, const std::string& path) {
    if (!ok) throw std::invalid_argument("report schema violation at " + path);
}

}  // namespace

std::string rational_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

std::string double_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max()) {
        return v.convert_to<long long>();
    }
    return v.str();
}

Json rational_json(const Rational& r) { return rational_string(r); }

Json dyadic_json(const Dyadic& d) {
    Json j = Json::object();
    if (d.is_zero()) {
        j["zero"] = true;
    } else {
        j["exp"] = int_json(-d.neg_exponent());
    }
    return j;
}

Json dist_json(const Dist& d) {
    Json j = Json::object();
    if (d.exact) {
        j["exact"] = rational_json(*d.exact);
    } else {
        j["approx"] = double_string(d.approx);
    }
    return j;
}

Json lattice_vector_json(const LatticeVector& v) {
    Json j = Json::array();
    for (int i = 0; i < v.dim(); ++i) j.push_back(int_json(v[i]));
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j = Json::object();
    j["outcome"] = outcome_name(v.outcome);
    j["rule"] = v.rule;
    j["exact"] = v.exact;
    if (v.window > 0) j["window"] = v.window;
    if (v.witness) {
        Json w = Json::object();
        Json pts = Json::array();
        for (const auto& p : v.witness->lattice_points) pts.push_back(lattice_vector_json(p));
        w["lattice_points"] = std::move(pts);
        w["notes"] = v.witness->notes;
        j["witness"] = std::move(w);
    }
    return j;
}

Json pair_class_json(const PairClass& pc) {
    Json j = Json::object();
    j["proximal"] = verdict_json(pc.proximal);
    j["asymptotic"] = verdict_json(pc.asymptotic);
    j["li_yorke"] = verdict_json(pc.li_yorke);
    Json grid = Json::array();
    for (const auto& [eps, v] : pc.asymptotic_at) {
        Json entry = Json::object();
        entry["eps"] = rational_json(eps);
        entry["verdict"] = verdict_json(v);
        grid.push_back(std::move(entry));
    }
    j["asymptotic_at"] = std::move(grid);
    j["liminf"] = pc.liminf ? rational_json(*pc.liminf) : Json(nullptr);
    j["limsup"] = pc.limsup ? rational_json(*pc.limsup) : Json(nullptr);
    return j;
}

Json profile_json(const std::vector<ProfileEntry>& profile) {
    Json j = Json::array();
    for (const auto& e : profile) {
        Json entry = Json::object();
        entry["n"] = lattice_vector_json(e.n);
        entry["distance"] = dist_json(e.value);
        j.push_back(std::move(entry));
    }
    return j;
}

Json theorem_case_json(const TheoremCase& c) {
    Json j = Json::object();
    j["id"] = c.id;
    j["status"] = case_status_name(c.status);
    j["statement"] = c.statement;
    j["instance"] = c.instance;
    auto block = [](const std::vector<std::pair<std::string, Verdict>>& vs) {
        Json arr = Json::array();
        for (const auto& [label, v] : vs) {
            Json entry = Json::object();
            entry["label"] = label;
            entry["verdict"] = verdict_json(v);
            arr.push_back(std::move(entry));
        }
        return arr;
    };
    j["hypotheses"] = block(c.hypotheses);
    j["conclusions"] = block(c.conclusions);
    j["note"] = c.note;
    return j;
}

Json dichotomy_json(const DichotomyReport& r) {
    Json j = Json::object();
    j["transitivity"] = verdict_json(r.transitivity);
    j["sensitivity"] = verdict_json(r.sensitivity);
    Json samples = Json::array();
    for (const auto& v : r.equicontinuity_samples) samples.push_back(verdict_json(v));
    j["equicontinuity_samples"] = std::move(samples);
    j["exclusion_ok"] = r.exclusion_ok;
    j["summary"] = r.summary;
    return j;
}

Json make_report(Json results) {
    Json j = Json::object();
    j["schema_version"] = kReportSchemaVersion;
    j["results"] = std::move(results);
    return j;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

void validate_report(const Json& report) {
    require(report.is_object(), "$");
    require(report.contains("schema_version") && report["schema_version"].is_number_integer(),
            "$.schema_version");
    require(report["schema_version"].get<int>() == kReportSchemaVersion, "$.schema_version");
    require(report.contains("results") && report["results"].is_array(), "$.results");
    for (std::size_t i = 0; i < report["results"].size(); ++i) {
        const auto& entry = report["results"][i];
        const std::string path = "$.results[" + std::to_string(i) + "]";
        require(entry.is_object(), path);
        require(entry.contains("analysis") && entry["analysis"].is_string(),
                path + ".analysis");
        require(entry.contains("output"), path + ".output");
    }
}

std::string profile_csv(const std::vector<ProfileEntry>& profile, int dim) {
    std::string out;
    for (int i = 0; i < dim; ++i) {
        out += "n_" + std::to_string(i + 1) + ",";
    }
    out += "distance_exp\n";
    for (const auto& e : profile) {
        for (int i = 0; i < dim; ++i) {
            out += e.n[i].str() + ",";
        }
        if (e.value.is_zero() && e.value.exact) {
            out += "-inf";
        } else if (e.value.exact) {
            if (const auto exp = pow2_exponent(*e.value.exact)) {
                out += std::to_string(*exp);
            } else {
                out += double_string(std::log2(e.value.approx));
            }
        } else {
            out += double_string(std::log2(e.value.approx));
        }
        out += "\n";
    }
    return out;
}

}  // namespace ktc
