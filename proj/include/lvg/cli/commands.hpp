#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "../oracle/bessel_laplace.hpp"
#include "../oracle/quadrature_variogram.hpp"
#include "../variogram/dispatch.hpp"

namespace lvg::cli {

enum exit_code : int { ok = 0, usage_or_domain = 1, not_converged = 2 };

struct OutputRecord {
    int s = 0, t = 0;
    double a = 0, b = 0;
    double value = 0;
    std::string method;
    double est_error = 0;
    long long terms = 0;
    bool converged = true;
};

struct Options {
    double a = 0, b = 0;
    unsigned s = 0, t = 0;
    unsigned smax = 0, tmax = 0;
    std::string method = "auto";
    std::string format = "csv";
    bool json = false;
    double tol = 1e-14;       // series tolerance for eval/table
    double verify_tol = 1e-6; // pairwise discrepancy budget for verify
    unsigned jobs = 1;
    std::size_t max_terms = EvalConfig{}.max_terms;
};

inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline const char* csv_header() { return "s,t,a,b,value,method,est_error,terms"; }

inline std::string to_csv(const OutputRecord& r) {
    std::ostringstream o;
    o << r.s << ',' << r.t << ',' << fmt17(r.a) << ',' << fmt17(r.b) << ',' << fmt17(r.value) << ',' << r.method
      << ',' << fmt17(r.est_error) << ',' << r.terms;
    return o.str();
}

inline OutputRecord from_csv(const std::string& line) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    detail::require(f.size() == 8, errc::domain, "CSV record needs 8 fields: " + line);
    OutputRecord r;
    r.s = std::stoi(f[0]);
    r.t = std::stoi(f[1]);
    r.a = std::strtod(f[2].c_str(), nullptr);
    r.b = std::strtod(f[3].c_str(), nullptr);
    r.value = std::strtod(f[4].c_str(), nullptr);
    r.method = f[5];
    r.est_error = std::strtod(f[6].c_str(), nullptr);
    r.terms = std::stoll(f[7]);
    return r;
}

inline nlohmann::json to_json(const OutputRecord& r) {
    return {{"s", r.s},           {"t", r.t},
            {"a", r.a},           {"b", r.b},
            {"value", r.value},   {"method", r.method},
            {"est_error", r.est_error}, {"terms", r.terms},
            {"converged", r.converged}};
}

inline std::string json_text(const nlohmann::json& j) {
    // 17 significant digits, same as the CSV
    std::string out;
    if (j.is_array()) {
        out = "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ",\n " : "\n ") + json_text(j[i]);
        return out + "\n]";
    }
    if (!j.is_object()) return j.dump();
    out = "{";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out += (first ? "" : ", ") + nlohmann::json(it.key()).dump() + ": ";
        out += it.value().is_number_float() ? fmt17(it.value().get<double>()) : json_text(it.value());
        first = false;
    }
    return out + "}";
}

namespace detail {

inline OutputRecord from_result(double a, double b, Lag lag, const VariogramResult& r) {
    return {int(lag.s), int(lag.t), a, b, r.value, to_string(r.method), r.est_error, (long long)r.terms(),
            r.converged()};
}

inline OutputRecord from_quad(double a, double b, Lag lag, const QuadValue& q, const char* name) {
    return {int(lag.s), int(lag.t), a, b, q.value, name, q.error, (long long)q.subdivisions, true};
}

inline EvalConfig soft_config(const Options& o) {
    EvalConfig cfg;
    cfg.tol = o.tol;
    cfg.max_terms = o.max_terms;
    cfg.throw_on_nonconvergence = false;
    return cfg;
}

} // namespace detail

// one method at one lag; --method values map onto the library paths
inline OutputRecord evaluate(const std::string& method, double a, double b, Lag lag, const EvalConfig& cfg,
                             const QuadratureSettings& q = {}) {
    if (method == "auto") return detail::from_result(a, b, lag, variogram(a, b, lag, cfg));
    if (method == "exact") return detail::from_result(a, b, lag, variogram_exact({a, b}, lag, cfg));
    if (method == "edge") {
        lvg::detail::require(a > 0 && b > 0 && std::abs(a + b - 0.5) <= cfg.edge_epsilon, errc::domain,
                             "edge method needs a, b > 0 with a + b = 1/2");
        return detail::from_result(a, b, lag, variogram_edge(a / (2 * (a + b)), lag, cfg));
    }
    if (method == "symmetric" || method == "diagonal") {
        lvg::detail::require(CoeffPair::classify(a, b, cfg).regime == Regime::SymmetricQuarter, errc::domain,
                             method + " method needs a = b = 1/4");
        if (method == "symmetric") return detail::from_result(a, b, lag, variogram_symmetric(lag, cfg));
        lvg::detail::require(lag.s == lag.t, errc::domain, "diagonal method needs s = t");
        const double v = variogram_diagonal(lag.s);
        return {int(lag.s), int(lag.t), a, b, v, to_string(Method::DiagonalClosed),
                4 * std::numeric_limits<double>::epsilon() * v, 0, true};
    }
    if (method == "quad") return detail::from_quad(a, b, lag, quadrature_variogram({a, b}, lag, q), "Quadrature");
    if (method == "bessel")
        return detail::from_quad(a, b, lag, bessel_laplace_difference({a, b}, lag, q), "BesselLaplace");
    throw error(errc::domain, "unknown method '" + method + "'");
}

// maps library failures onto the exit-code contract
inline int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return e.is_convergence_failure() ? not_converged : usage_or_domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_or_domain;
    }
}

inline int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const auto rec = evaluate(o.method, o.a, o.b, {o.s, o.t}, detail::soft_config(o));
            if (o.json)
                out << json_text(to_json(rec)) << '\n';
            else
                out << csv_header() << '\n' << to_csv(rec) << '\n';
            if (!rec.converged) {
                err << "warning: series did not reach the requested tolerance\n";
                return int(not_converged);
            }
            return int(ok);
        },
        err);
}

inline std::vector<OutputRecord> table_records(const Options& o) {
    const EvalConfig cfg = detail::soft_config(o);
    const std::size_t ns = o.smax + 1, nt = o.tmax + 1, n = ns * nt;
    std::vector<OutputRecord> recs(n);
    std::vector<std::exception_ptr> fails(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                recs[i] = evaluate(o.method, o.a, o.b, {unsigned(i / nt), unsigned(i % nt)}, cfg);
            } catch (...) {
                fails[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, unsigned(n)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& f : fails)
        if (f) std::rethrow_exception(f);
    return recs;
}

inline int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            lvg::detail::require(o.format == "csv" || o.format == "json", errc::domain,
                                 "--format must be csv or json");
            const auto recs = table_records(o);
            if (o.format == "csv") {
                out << csv_header() << '\n';
                for (const auto& r : recs) out << to_csv(r) << '\n';
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : recs) arr.push_back(to_json(r));
                out << json_text(arr) << '\n';
            }
            const bool all = std::all_of(recs.begin(), recs.end(), [](const auto& r) { return r.converged; });
            return int(all ? ok : not_converged);
        },
        err);
}

struct VerifyReport {
    std::vector<OutputRecord> rows;
    double max_raw = 0;       // max |v_i - v_j|
    double max_adjusted = 0;  // max(0, |v_i - v_j| - e_i - e_j)
};

inline std::vector<std::string> verify_methods(double a, double b, Lag lag, const EvalConfig& cfg) {
    switch (CoeffPair::classify(a, b, cfg).regime) {
    case Regime::SymmetricQuarter: {
        std::vector<std::string> m{"symmetric"};
        if (lag.s == lag.t) m.push_back("diagonal");
        m.insert(m.end(), {"edge", "quad", "bessel"});
        return m;
    }
    case Regime::Edge: return {"edge", "quad", "bessel"};
    case Regime::Interior: break;
    }
    return {"exact", "quad", "bessel"};
}

inline VerifyReport verify_report(double a, double b, Lag lag, const EvalConfig& cfg) {
    VerifyReport rep;
    for (const auto& m : verify_methods(a, b, lag, cfg)) rep.rows.push_back(evaluate(m, a, b, lag, cfg));
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
        for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
            const double d = std::abs(rep.rows[i].value - rep.rows[j].value);
            rep.max_raw = std::max(rep.max_raw, d);
            rep.max_adjusted =
                std::max(rep.max_adjusted, std::max(0.0, d - rep.rows[i].est_error - rep.rows[j].est_error));
        }
    return rep;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const auto rep = verify_report(o.a, o.b, {o.s, o.t}, detail::soft_config(o));
            const bool pass = rep.max_adjusted <= o.verify_tol;
            if (o.json) {
                nlohmann::json j;
                j["records"] = nlohmann::json::array();
                for (const auto& r : rep.rows) j["records"].push_back(to_json(r));
                j["max_discrepancy"] = rep.max_raw;
                j["max_discrepancy_beyond_error"] = rep.max_adjusted;
                j["tol"] = o.verify_tol;
                j["pass"] = pass;
                out << json_text(j) << '\n';
            } else {
                out << csv_header() << '\n';
                for (const auto& r : rep.rows) out << to_csv(r) << '\n';
                out << "max_discrepancy=" << fmt17(rep.max_raw)
                    << " max_discrepancy_beyond_error=" << fmt17(rep.max_adjusted) << " tol=" << fmt17(o.verify_tol)
                    << (pass ? " PASS" : " FAIL") << '\n';
            }
            return int(pass ? ok : not_converged);
        },
        err);
}

} // namespace lvg::cli
