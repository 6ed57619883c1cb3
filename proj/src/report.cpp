// SPDX-License-Identifier: Apache-2.0
#include "alphaineq/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace alphaineq {

namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_vec(std::span<const double> v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt_real(v[i]);
    }
    return out + "]";
}

std::string fmt_matrix(const MultiInstance& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (i) out += ", ";
        out += fmt_vec(std::span<const double>(m.data).subspan(i * m.cols, m.cols));
    }
    return out + "]";
}

// compact one-line instance object including its exponent parameters
std::string instance_json(InequalityId id, const TrialInstance& ti) {
    std::string out = "{\"type\": \"";
    out += to_string(id);
    out += "\", \"alpha\": " + fmt_real(ti.spec.dim.alpha());
    if (ti.params.pair) {
        out += ", \"p\": " + fmt_real(ti.params.pair->p);
        out += ", \"q\": " + fmt_real(ti.params.pair->q);
    }
    if (ti.params.p) out += ", \"p\": " + fmt_real(*ti.params.p);
    if (ti.params.r) out += ", \"r\": " + fmt_real(*ti.params.r);
    if (ti.params.tuple)
        out += ", \"exponents\": " + fmt_vec(ti.params.tuple->exponents);
    std::visit(
        [&](const auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, BernoulliInstance>) {
                out += ", \"y\": " + fmt_real(payload.y);
                out += ", \"m\": " + fmt_real(payload.m);
            } else if constexpr (std::is_same_v<T, YoungInstance>) {
                out += ", \"a\": " + fmt_real(payload.a);
                out += ", \"b\": " + fmt_real(payload.b);
            } else if constexpr (std::is_same_v<T, NaryYoungInstance>) {
                out += ", \"a\": " + fmt_vec(payload.a);
            } else if constexpr (std::is_same_v<T, PairedInstance>) {
                out += ", \"x\": " + fmt_vec(payload.x);
                out += ", \"y\": " + fmt_vec(payload.y);
            } else if constexpr (std::is_same_v<T, MultiInstance>) {
                out += ", \"rows\": " + std::to_string(payload.rows);
                out += ", \"cols\": " + std::to_string(payload.cols);
                out += ", \"data\": " + fmt_matrix(payload);
            } else {
                static_assert(std::is_same_v<T, RadonInstance>);
                out += ", \"r\": " + fmt_real(payload.r);
                out += ", \"x\": " + fmt_vec(payload.x);
                out += ", \"y\": " + fmt_vec(payload.y);
            }
        },
        ti.spec.payload);
    return out + "}";
}

std::string verdict_json(const Verdict& v) {
    std::string out = "{\"lhs\": " + fmt_real(v.lhs);
    out += ", \"rhs\": " + fmt_real(v.rhs);
    out += ", \"gap\": " + fmt_real(v.gap);
    out += ", \"scale\": " + fmt_real(v.scale);
    out += std::string(", \"direction\": \"") + to_string(v.direction) + "\"";
    out += std::string(", \"status\": \"") + to_string(v.status) + "\"}";
    return out;
}

std::string alpha_policy_json(const AlphaPolicy& a) {
    if (a.kind == AlphaPolicy::Kind::fixed)
        return "{\"kind\": \"fixed\", \"value\": " + fmt_real(a.value) + "}";
    return "{\"kind\": \"sampled\"}";
}

std::string alpha_policy_json(const AlphaSetting& a) {
    if (a.kind == AlphaSetting::Kind::fixed)
        return "{\"kind\": \"fixed\", \"value\": " + fmt_real(a.value) + "}";
    if (a.kind == AlphaSetting::Kind::grid)
        return "{\"kind\": \"grid\", \"values\": " + fmt_vec(a.grid) + "}";
    return "{\"kind\": \"sampled\"}";
}

void write_report_json_indented(std::ostream& os, const SuiteReport& r,
                                const std::string& ind) {
    os << ind << "{\n";
    os << ind << "  \"inequality\": \"" << to_string(r.id) << "\",\n";
    os << ind << "  \"variant\": \"" << to_string(r.variant) << "\",\n";
    os << ind << "  \"regime\": \"" << to_string(r.regime) << "\",\n";
    os << ind << "  \"alpha_policy\": " << alpha_policy_json(r.alpha) << ",\n";
    os << ind << "  \"trials\": " << r.trials << ",\n";
    os << ind << "  \"tolerance\": {\"rel\": " << fmt_real(r.tol.tol_rel)
       << ", \"eq\": " << fmt_real(r.tol.tol_eq) << "},\n";
    os << ind << "  \"seed\": " << r.seed << ",\n";
    os << ind << "  \"results\": {\n";
    os << ind << "    \"holds\": " << r.holds << ",\n";
    os << ind << "    \"equality\": " << r.equality << ",\n";
    os << ind << "    \"violations\": " << r.violations << ",\n";
    os << ind << "    \"min_gap\": " << fmt_real(r.min_gap) << ",\n";
    if (r.worst) {
        os << ind << "    \"worst_instance\": {\"trial\": " << r.worst->trial_index
           << ", \"instance\": " << instance_json(r.id, r.worst->instance)
           << ", \"verdict\": " << verdict_json(r.worst->verdict) << "}\n";
    } else {
        os << ind << "    \"worst_instance\": null\n";
    }
    os << ind << "  },\n";
    os << ind << "  \"runtime_ms\": " << fmt_real(r.runtime_ms) << "\n";
    os << ind << "}";
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

} // namespace

void write_report_json(std::ostream& os, const SuiteReport& report) {
    write_report_json_indented(os, report, "");
    os << "\n";
}

void write_reports_json(std::ostream& os, std::span<const SuiteReport> reports) {
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        write_report_json_indented(os, reports[i], "  ");
        os << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

void write_reports_csv(std::ostream& os, std::span<const SuiteReport> reports) {
    os << "inequality,variant,regime,alpha_kind,alpha,trials,seed,tol_rel,tol_eq,"
          "holds,equality,violations,min_gap,worst_instance,runtime_ms\n";
    for (const SuiteReport& r : reports) {
        os << to_string(r.id) << ',' << to_string(r.variant) << ','
           << to_string(r.regime) << ',';
        if (r.alpha.kind == AlphaPolicy::Kind::fixed)
            os << "fixed," << fmt_real(r.alpha.value) << ',';
        else
            os << "sampled,,";
        os << r.trials << ',' << r.seed << ',' << fmt_real(r.tol.tol_rel) << ','
           << fmt_real(r.tol.tol_eq) << ',' << r.holds << ',' << r.equality << ','
           << r.violations << ',' << fmt_real(r.min_gap) << ',';
        if (r.worst)
            os << csv_quote("{\"instance\": " + instance_json(r.id, r.worst->instance) +
                            ", \"verdict\": " + verdict_json(r.worst->verdict) + "}");
        os << ',' << fmt_real(r.runtime_ms) << '\n';
    }
}

namespace {

std::string params_json(const EvalParams& params) {
    std::string out = "{";
    bool first = true;
    auto add = [&](const std::string& piece) {
        if (!first) out += ", ";
        out += piece;
        first = false;
    };
    if (params.pair) {
        add("\"p\": " + fmt_real(params.pair->p));
        add("\"q\": " + fmt_real(params.pair->q));
    }
    if (params.p) add("\"p\": " + fmt_real(*params.p));
    if (params.r) add("\"r\": " + fmt_real(*params.r));
    if (params.tuple) add("\"exponents\": " + fmt_vec(params.tuple->exponents));
    return out + "}";
}

} // namespace

void write_certify_json(std::ostream& os, const CertifyReport& r) {
    os << "{\n";
    os << "  \"inequality\": \"" << to_string(r.id) << "\",\n";
    os << "  \"variant\": \"" << to_string(r.variant) << "\",\n";
    os << "  \"regime\": \"" << to_string(r.regime) << "\",\n";
    os << "  \"alpha_policy\": {\"kind\": \"fixed\", \"value\": "
       << fmt_real(r.certificate.alpha) << "},\n";
    os << "  \"params\": " << params_json(r.params) << ",\n";
    os << "  \"samples\": " << r.samples << ",\n";
    os << "  \"tolerance\": {\"rel\": " << fmt_real(r.tol.tol_rel)
       << ", \"eq\": " << fmt_real(r.tol.tol_eq) << "},\n";
    os << "  \"seed\": " << r.seed << ",\n";
    os << "  \"region\": {\"lo\": " << fmt_real(r.region.lo)
       << ", \"hi\": " << fmt_real(r.region.hi) << "},\n";
    os << "  \"restarts\": " << r.certificate.restarts << ",\n";
    os << "  \"budget\": " << r.budget << ",\n";
    os << "  \"results\": {\n";
    os << "    \"manifold_max_gap\": " << fmt_real(r.manifold_max_gap) << ",\n";
    os << "    \"converged\": " << (r.certificate.converged ? "true" : "false") << ",\n";
    os << "    \"gap_at_argmin\": " << fmt_real(r.certificate.gap_at_argmin) << ",\n";
    os << "    \"scale\": " << fmt_real(r.certificate.scale_at_argmin) << ",\n";
    os << "    \"condition_residual\": " << fmt_real(r.certificate.condition_residual)
       << ",\n";
    os << "    \"evaluations\": " << r.certificate.evaluations << ",\n";
    os << "    \"argmin\": " << fmt_vec(r.certificate.argmin) << ",\n";
    os << "    \"perturb_delta\": " << fmt_real(r.delta) << ",\n";
    os << "    \"perturb_strict\": " << (r.perturb_strict ? "true" : "false") << "\n";
    os << "  },\n";
    os << "  \"runtime_ms\": " << fmt_real(r.runtime_ms) << "\n";
    os << "}\n";
}

void write_certify_csv(std::ostream& os, const CertifyReport& r) {
    os << "inequality,variant,regime,alpha,samples,seed,manifold_max_gap,converged,"
          "gap_at_argmin,condition_residual,evaluations,perturb_strict,runtime_ms\n";
    os << to_string(r.id) << ',' << to_string(r.variant) << ',' << to_string(r.regime)
       << ',' << fmt_real(r.certificate.alpha) << ',' << r.samples << ',' << r.seed << ','
       << fmt_real(r.manifold_max_gap) << ',' << (r.certificate.converged ? 1 : 0) << ','
       << fmt_real(r.certificate.gap_at_argmin) << ','
       << fmt_real(r.certificate.condition_residual) << ',' << r.certificate.evaluations
       << ',' << (r.perturb_strict ? 1 : 0) << ',' << fmt_real(r.runtime_ms) << '\n';
}

void write_counterexample_json(std::ostream& os, const CounterexampleReport& r) {
    os << "{\n";
    os << "  \"inequality\": \"" << to_string(r.id) << "\",\n";
    os << "  \"variant\": \"" << to_string(r.variant) << "\",\n";
    os << "  \"regime\": \"" << to_string(r.regime) << "\",\n";
    os << "  \"alpha_policy\": " << alpha_policy_json(r.alpha) << ",\n";
    os << "  \"trials\": " << r.trials << ",\n";
    os << "  \"tolerance\": {\"rel\": " << fmt_real(r.tol.tol_rel)
       << ", \"eq\": " << fmt_real(r.tol.tol_eq) << "},\n";
    os << "  \"seed\": " << r.seed << ",\n";
    os << "  \"results\": {\n";
    os << "    \"found\": " << (r.found ? "true" : "false") << ",\n";
    os << "    \"trials_searched\": " << r.trials_searched << ",\n";
    if (r.violation) {
        os << "    \"violation\": {\"trial\": " << r.violation->trial_index
           << ", \"instance\": " << instance_json(r.id, r.violation->instance)
           << ", \"verdict\": " << verdict_json(r.violation->verdict) << "},\n";
    } else {
        os << "    \"violation\": null,\n";
    }
    if (r.shrunk && r.shrunk_verdict) {
        os << "    \"shrunk\": {\"instance\": " << instance_json(r.id, *r.shrunk)
           << ", \"verdict\": " << verdict_json(*r.shrunk_verdict)
           << ", \"size\": " << fmt_real(instance_size(*r.shrunk)) << "}\n";
    } else {
        os << "    \"shrunk\": null\n";
    }
    os << "  },\n";
    os << "  \"runtime_ms\": " << fmt_real(r.runtime_ms) << "\n";
    os << "}\n";
}

void write_counterexample_csv(std::ostream& os, const CounterexampleReport& r) {
    os << "inequality,variant,regime,trials,seed,found,trials_searched,violation,shrunk,"
          "runtime_ms\n";
    os << to_string(r.id) << ',' << to_string(r.variant) << ',' << to_string(r.regime)
       << ',' << r.trials << ',' << r.seed << ',' << (r.found ? 1 : 0) << ','
       << r.trials_searched << ',';
    if (r.violation)
        os << csv_quote(instance_json(r.id, r.violation->instance));
    os << ',';
    if (r.shrunk)
        os << csv_quote(instance_json(r.id, *r.shrunk));
    os << ',' << fmt_real(r.runtime_ms) << '\n';
}

// ---------------------------------------------------------------------------
// CSV instance ingestion

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

double parse_number(const std::string& token, const std::string& where) {
    if (token.empty()) throw IngestionError(where + ": empty numeric field");
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        throw IngestionError(where + ": malformed number '" + token + "'");
    return v;
}

double parse_magnitude(const std::string& token, const std::string& where) {
    const double v = parse_number(token, where);
    if (!std::isfinite(v) || v < 0.0)
        throw IngestionError(where + ": magnitudes must be finite and nonnegative");
    if (v > 1e6)
        throw IngestionError(where + ": magnitude exceeds the supported range [0, 1e6]");
    return v;
}

// header must be name1..namek in order, e.g. x1,x2,...,xn
bool is_indexed_run(const std::vector<std::string>& header, std::size_t begin,
                    std::size_t count, const std::string& stem) {
    for (std::size_t i = 0; i < count; ++i)
        if (header[begin + i] != stem + std::to_string(i + 1)) return false;
    return true;
}

} // namespace

std::vector<TrialInstance> load_instances(const std::string& path, InequalityId id,
                                          Dimension dim,
                                          std::optional<double> fallback_r) {
    std::ifstream in(path);
    if (!in) throw IngestionError(path + ": cannot open instance file");

    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = trim(line);
        if (trimmed.empty()) continue;
        if (header.empty()) {
            header = split_csv_line(trimmed);
        } else {
            rows.push_back(split_csv_line(trimmed));
            line_numbers.push_back(line_no);
        }
    }
    if (header.empty()) throw IngestionError(path + ": missing header row");
    if (rows.empty()) throw IngestionError(path + ": no data rows");

    auto where = [&](std::size_t row_idx) {
        return path + ":line " + std::to_string(line_numbers[row_idx]);
    };
    auto expect_width = [&](std::size_t row_idx, std::size_t width) {
        if (rows[row_idx].size() != width)
            throw IngestionError(where(row_idx) + ": expected " + std::to_string(width) +
                                 " fields, got " + std::to_string(rows[row_idx].size()));
    };

    std::vector<TrialInstance> out;
    switch (id) {
        case InequalityId::bernoulli: {
            if (header != std::vector<std::string>{"y", "m"})
                throw IngestionError(path + ": bernoulli expects header y,m");
            for (std::size_t i = 0; i < rows.size(); ++i) {
                expect_width(i, 2);
                const double y = parse_number(rows[i][0], where(i));
                const double m = parse_number(rows[i][1], where(i));
                if (!std::isfinite(y) || y <= 0.0)
                    throw IngestionError(where(i) + ": bernoulli requires y > 0");
                out.push_back({InstanceSpec{BernoulliInstance{y, m}, dim}, {}});
            }
            break;
        }
        case InequalityId::young: {
            if (header != std::vector<std::string>{"a", "b"})
                throw IngestionError(path + ": young expects header a,b");
            for (std::size_t i = 0; i < rows.size(); ++i) {
                expect_width(i, 2);
                out.push_back({InstanceSpec{YoungInstance{parse_magnitude(rows[i][0], where(i)),
                                                          parse_magnitude(rows[i][1], where(i))},
                                            dim},
                               {}});
            }
            break;
        }
        case InequalityId::nary_young: {
            // a1..an with optional p1..pn
            std::size_t n = 0;
            while (n < header.size() && header[n] == "a" + std::to_string(n + 1)) ++n;
            const bool with_p = header.size() == 2 * n && n >= 2 &&
                                is_indexed_run(header, n, n, "p");
            if (n < 2 || (header.size() != n && !with_p))
                throw IngestionError(path +
                                     ": nary_young expects header a1..an[,p1..pn], n >= 2");
            for (std::size_t i = 0; i < rows.size(); ++i) {
                expect_width(i, header.size());
                NaryYoungInstance inst;
                for (std::size_t j = 0; j < n; ++j)
                    inst.a.push_back(parse_magnitude(rows[i][j], where(i)));
                EvalParams params;
                if (with_p) {
                    std::vector<double> exps;
                    for (std::size_t j = 0; j < n; ++j)
                        exps.push_back(parse_number(rows[i][n + j], where(i)));
                    try {
                        params.tuple = ExponentTuple::from_exponents(std::move(exps));
                    } catch (const Error& e) {
                        throw IngestionError(where(i) + ": " + e.what());
                    }
                }
                out.push_back({InstanceSpec{std::move(inst), dim}, std::move(params)});
            }
            break;
        }
        case InequalityId::holder:
        case InequalityId::minkowski:
        case InequalityId::radon: {
            const bool with_r = id == InequalityId::radon && header.back() == "r";
            const std::size_t width = header.size() - (with_r ? 1 : 0);
            if (width < 2 || width % 2 != 0 ||
                !is_indexed_run(header, 0, width / 2, "x") ||
                !is_indexed_run(header, width / 2, width / 2, "y"))
                throw IngestionError(path + ": paired ids expect header x1..xn,y1..yn" +
                                     (id == InequalityId::radon ? "[,r]" : ""));
            const std::size_t n = width / 2;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                expect_width(i, header.size());
                std::vector<double> x(n), y(n);
                for (std::size_t j = 0; j < n; ++j) {
                    x[j] = parse_magnitude(rows[i][j], where(i));
                    y[j] = parse_magnitude(rows[i][n + j], where(i));
                }
                if (id == InequalityId::radon) {
                    double r;
                    if (with_r) {
                        r = parse_number(rows[i].back(), where(i));
                    } else if (fallback_r) {
                        r = *fallback_r;
                    } else {
                        throw IngestionError(where(i) +
                                             ": radon needs an r column or the --r flag");
                    }
                    out.push_back({InstanceSpec{RadonInstance{std::move(x), std::move(y), r},
                                                dim},
                                   {}});
                } else {
                    out.push_back({InstanceSpec{PairedInstance{std::move(x), std::move(y)},
                                                dim},
                                   {}});
                }
            }
            break;
        }
        case InequalityId::holder_multi:
        case InequalityId::minkowski_multi:
        case InequalityId::radon_multi: {
            const std::size_t m = header.size();
            if (!is_indexed_run(header, 0, m, "x"))
                throw IngestionError(path + ": multi ids expect header x1..xm");
            MultiInstance inst{rows.size(), m, {}};
            inst.data.reserve(rows.size() * m);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                expect_width(i, m);
                for (std::size_t j = 0; j < m; ++j)
                    inst.data.push_back(parse_magnitude(rows[i][j], where(i)));
            }
            out.push_back({InstanceSpec{std::move(inst), dim}, {}});
            break;
        }
    }
    return out;
}

void write_instances_csv(std::ostream& os, InequalityId id,
                         std::span<const TrialInstance> instances) {
    if (instances.empty()) throw UsageError("write_instances_csv: nothing to write");
    switch (id) {
        case InequalityId::bernoulli: {
            os << "y,m\n";
            for (const TrialInstance& ti : instances) {
                const auto& b = std::get<BernoulliInstance>(ti.spec.payload);
                os << fmt_real(b.y) << ',' << fmt_real(b.m) << '\n';
            }
            break;
        }
        case InequalityId::young: {
            os << "a,b\n";
            for (const TrialInstance& ti : instances) {
                const auto& y = std::get<YoungInstance>(ti.spec.payload);
                os << fmt_real(y.a) << ',' << fmt_real(y.b) << '\n';
            }
            break;
        }
        case InequalityId::nary_young: {
            const auto& first = std::get<NaryYoungInstance>(instances[0].spec.payload);
            const std::size_t n = first.a.size();
            for (std::size_t j = 0; j < n; ++j) os << "a" << (j + 1) << (j + 1 < n ? "," : "");
            if (instances[0].params.tuple)
                for (std::size_t j = 0; j < n; ++j) os << ",p" << (j + 1);
            os << '\n';
            for (const TrialInstance& ti : instances) {
                const auto& inst = std::get<NaryYoungInstance>(ti.spec.payload);
                if (inst.a.size() != n || static_cast<bool>(ti.params.tuple) !=
                                              static_cast<bool>(instances[0].params.tuple))
                    throw UsageError("write_instances_csv: mixed nary shapes");
                for (std::size_t j = 0; j < n; ++j)
                    os << fmt_real(inst.a[j]) << (j + 1 < n ? "," : "");
                if (ti.params.tuple)
                    for (double p : ti.params.tuple->exponents) os << ',' << fmt_real(p);
                os << '\n';
            }
            break;
        }
        case InequalityId::holder:
        case InequalityId::minkowski:
        case InequalityId::radon: {
            const bool radon = id == InequalityId::radon;
            std::size_t n;
            if (radon)
                n = std::get<RadonInstance>(instances[0].spec.payload).x.size();
            else
                n = std::get<PairedInstance>(instances[0].spec.payload).x.size();
            for (std::size_t j = 0; j < n; ++j) os << "x" << (j + 1) << ',';
            for (std::size_t j = 0; j < n; ++j)
                os << "y" << (j + 1) << (j + 1 < n ? "," : "");
            if (radon) os << ",r";
            os << '\n';
            for (const TrialInstance& ti : instances) {
                const std::vector<double>* x;
                const std::vector<double>* y;
                double r = 0.0;
                if (radon) {
                    const auto& inst = std::get<RadonInstance>(ti.spec.payload);
                    x = &inst.x;
                    y = &inst.y;
                    r = inst.r;
                } else {
                    const auto& inst = std::get<PairedInstance>(ti.spec.payload);
                    x = &inst.x;
                    y = &inst.y;
                }
                if (x->size() != n) throw UsageError("write_instances_csv: mixed lengths");
                for (std::size_t j = 0; j < n; ++j) os << fmt_real((*x)[j]) << ',';
                for (std::size_t j = 0; j < n; ++j)
                    os << fmt_real((*y)[j]) << (j + 1 < n ? "," : "");
                if (radon) os << ',' << fmt_real(r);
                os << '\n';
            }
            break;
        }
        case InequalityId::holder_multi:
        case InequalityId::minkowski_multi:
        case InequalityId::radon_multi: {
            if (instances.size() != 1)
                throw UsageError("write_instances_csv: a multi file holds one instance");
            const auto& inst = std::get<MultiInstance>(instances[0].spec.payload);
            for (std::size_t j = 0; j < inst.cols; ++j)
                os << "x" << (j + 1) << (j + 1 < inst.cols ? "," : "");
            os << '\n';
            for (std::size_t i = 0; i < inst.rows; ++i) {
                for (std::size_t j = 0; j < inst.cols; ++j)
                    os << fmt_real(inst.at(i, j)) << (j + 1 < inst.cols ? "," : "");
                os << '\n';
            }
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// CLI

namespace {

std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> grid;
    for (const std::string& tok : split_csv_line(s)) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (tok.empty() || end == tok.c_str() || *end != '\0')
            throw UsageError("malformed --alpha-grid entry '" + tok + "'");
        if (!(v > 0.0) || !(v <= 1.0))
            throw UsageError("--alpha-grid values must lie in (0, 1]");
        grid.push_back(v);
    }
    if (grid.empty()) throw UsageError("--alpha-grid needs at least one value");
    return grid;
}

BernoulliYRange parse_y_range(const std::string& s) {
    if (s == "upper") return BernoulliYRange::upper;
    if (s == "unit") return BernoulliYRange::unit;
    if (s == "full") return BernoulliYRange::full;
    throw UsageError("unknown --y-range: " + s + " (expected upper|unit|full)");
}

} // namespace

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"verification toolkit for alpha-type Young/Holder/Minkowski/Radon inequalities"};
    app.name("alphaineq");
    app.require_subcommand(1);

    std::string id_str, variant_str = "normalized", regime_str = "holder",
                format_str = "json", y_range_str = "upper", grid_str;
    std::optional<double> alpha_opt;
    std::optional<std::uint64_t> seed_opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("id", id_str, "inequality id")->required();
        sub->add_option("--variant", variant_str, "normalized|as-written");
        sub->add_option("--regime", regime_str, "holder|reverse");
        sub->add_option("--trials", cfg.trials, "trial count (certify: manifold samples)");
        sub->add_option("--seed", seed_opt, "master seed (default: ALPHA_INEQ_SEED or 0)");
        sub->add_option("--alpha", alpha_opt, "fixed fractal dimension in (0,1]");
        sub->add_option("--alpha-grid", grid_str, "comma list of alphas (sweep only)");
        sub->add_option("--p", cfg.p, "exponent p");
        sub->add_option("--q", cfg.q, "conjugate exponent q (consistency-checked)");
        sub->add_option("--r", cfg.r, "radon exponent r in (0,1)");
        sub->add_option("--input", cfg.input_path, "CSV instance file (bypasses samplers)");
        sub->add_option("--format", format_str, "json|csv");
        sub->add_option("--out", cfg.out_path, "output path (default: stdout)");
        sub->add_option("--tol-rel", cfg.tol.tol_rel, "relative hold tolerance");
        sub->add_option("--tol-eq", cfg.tol.tol_eq, "relative equality tolerance");
        sub->add_option("--restarts", cfg.restarts, "certify: simplex restarts");
        sub->add_option("--budget", cfg.budget, "certify: evaluations per restart");
        sub->add_option("--n", cfg.size_hint, "certify: vector length / matrix size");
        sub->add_option("--delta", cfg.delta, "certify: perturbation size");
        sub->add_option("--region-lo", cfg.region.lo, "certify: search box lower edge");
        sub->add_option("--region-hi", cfg.region.hi, "certify: search box upper edge");
        sub->add_option("--y-range", y_range_str, "bernoulli y window: upper|unit|full");
        return sub;
    };

    CLI::App* verify = add_common(
        app.add_subcommand("verify", "run a randomized suite or evaluate --input instances"));
    CLI::App* sweep =
        add_common(app.add_subcommand("sweep", "run one suite per --alpha-grid value"));
    CLI::App* certify = add_common(
        app.add_subcommand("certify", "check the equality conditions numerically"));
    CLI::App* counterexample = add_common(app.add_subcommand(
        "counterexample", "search for a violation and shrink it"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands()[0];
        throw HelpRequested{active->help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (verify->parsed()) cfg.cmd = Command::verify;
    if (sweep->parsed()) cfg.cmd = Command::sweep;
    if (certify->parsed()) cfg.cmd = Command::certify;
    if (counterexample->parsed()) cfg.cmd = Command::counterexample;

    cfg.id = parse_inequality_id(id_str);
    cfg.variant = parse_form_variant(variant_str);
    cfg.regime = parse_regime(regime_str);
    cfg.y_range = parse_y_range(y_range_str);
    if (format_str == "json")
        cfg.format = OutputFormat::json;
    else if (format_str == "csv")
        cfg.format = OutputFormat::csv;
    else
        throw UsageError("unknown --format: " + format_str + " (expected json|csv)");

    if (alpha_opt && !grid_str.empty())
        throw UsageError("--alpha conflicts with --alpha-grid");
    if (cfg.cmd == Command::sweep) {
        if (grid_str.empty()) throw UsageError("sweep requires --alpha-grid");
        cfg.alpha.kind = AlphaSetting::Kind::grid;
        cfg.alpha.grid = parse_grid(grid_str);
    } else if (!grid_str.empty()) {
        throw UsageError("--alpha-grid only applies to the sweep subcommand");
    } else if (alpha_opt) {
        if (!(*alpha_opt > 0.0) || !(*alpha_opt <= 1.0))
            throw UsageError("--alpha must lie in (0, 1]");
        cfg.alpha.kind = AlphaSetting::Kind::fixed;
        cfg.alpha.value = *alpha_opt;
    }

    if (seed_opt) {
        cfg.seed = *seed_opt;
    } else if (const char* env = std::getenv("ALPHA_INEQ_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw UsageError("malformed ALPHA_INEQ_SEED value '" + std::string(env) + "'");
        cfg.seed = v;
    }

    if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
    cfg.tol.validate();
    if (cfg.q) {
        if (!cfg.p) throw UsageError("--q requires --p");
        ConjugatePair::from_pq(*cfg.p, *cfg.q);
    }
    if (cfg.input_path &&
        (cfg.cmd == Command::certify || cfg.cmd == Command::counterexample))
        throw UsageError("--input applies to verify and sweep only");
    if (cfg.input_path && cfg.alpha.kind == AlphaSetting::Kind::sampled) {
        // instances carry no dimension of their own; default to the classical one
        cfg.alpha.kind = AlphaSetting::Kind::fixed;
        cfg.alpha.value = 1.0;
    }
    return cfg;
}

namespace {

SuiteConfig to_suite_config(const RunConfig& cfg, AlphaPolicy alpha) {
    SuiteConfig sc;
    sc.id = cfg.id;
    sc.variant = cfg.variant;
    sc.regime = cfg.regime;
    sc.trials = cfg.trials;
    sc.seed = cfg.seed;
    sc.alpha = alpha;
    sc.tol = cfg.tol;
    sc.fixed_p = cfg.p;
    sc.fixed_r = cfg.r;
    sc.y_range = cfg.y_range;
    return sc;
}

// fill exponent parameters for file-loaded instances from the flags
void merge_flag_params(const RunConfig& cfg, std::vector<TrialInstance>& instances) {
    for (TrialInstance& ti : instances) {
        switch (cfg.id) {
            case InequalityId::young:
            case InequalityId::holder: {
                if (!cfg.p) throw UsageError("--p is required with --input for this id");
                ti.params.pair = cfg.q ? ConjugatePair::from_pq(*cfg.p, *cfg.q)
                                       : ConjugatePair::from_p(*cfg.p);
                break;
            }
            case InequalityId::minkowski:
            case InequalityId::minkowski_multi: {
                if (!cfg.p) throw UsageError("--p is required with --input for this id");
                ti.params.p = *cfg.p;
                break;
            }
            case InequalityId::radon: {
                if (!cfg.p) throw UsageError("--p is required with --input for this id");
                ti.params.p = *cfg.p;
                break;
            }
            case InequalityId::radon_multi: {
                if (!cfg.p || !cfg.r)
                    throw UsageError("--p and --r are required with --input for this id");
                ti.params.p = *cfg.p;
                ti.params.r = *cfg.r;
                break;
            }
            case InequalityId::nary_young: {
                if (!ti.params.tuple) {
                    const auto& inst = std::get<NaryYoungInstance>(ti.spec.payload);
                    ti.params.tuple = ExponentTuple::from_exponents(std::vector<double>(
                        inst.a.size(), static_cast<double>(inst.a.size())));
                }
                break;
            }
            case InequalityId::holder_multi: {
                if (!ti.params.tuple) {
                    const auto& inst = std::get<MultiInstance>(ti.spec.payload);
                    ti.params.tuple = ExponentTuple::from_exponents(std::vector<double>(
                        inst.cols, static_cast<double>(inst.cols)));
                }
                break;
            }
            case InequalityId::bernoulli:
                break;
        }
    }
}

EvalParams certify_params(const RunConfig& cfg) {
    EvalParams params;
    switch (cfg.id) {
        case InequalityId::young:
        case InequalityId::holder:
            if (!cfg.p) throw UsageError("certify: --p is required for this id");
            params.pair = cfg.q ? ConjugatePair::from_pq(*cfg.p, *cfg.q)
                                : ConjugatePair::from_p(*cfg.p);
            break;
        case InequalityId::minkowski:
        case InequalityId::minkowski_multi:
            if (!cfg.p) throw UsageError("certify: --p is required for this id");
            params.p = *cfg.p;
            break;
        case InequalityId::radon:
        case InequalityId::radon_multi:
            if (!cfg.p || !cfg.r)
                throw UsageError("certify: --p and --r are required for this id");
            params.p = *cfg.p;
            params.r = *cfg.r;
            break;
        case InequalityId::nary_young:
        case InequalityId::holder_multi: {
            // uniform holder tuple (n, ..., n); reverse tuples need the API
            if (cfg.regime == Regime::reverse)
                throw UsageError("certify: reverse exponent tuples are not expressible "
                                 "via flags; use the library API");
            const std::size_t n = std::max<std::size_t>(cfg.size_hint, 2);
            params.tuple = ExponentTuple::from_exponents(
                std::vector<double>(n, static_cast<double>(n)));
            break;
        }
        case InequalityId::bernoulli:
            throw UsageError("bernoulli states no equality condition to certify");
    }
    return params;
}

int execute(const RunConfig& cfg, std::ostream& os) {
    switch (cfg.cmd) {
        case Command::verify: {
            const AlphaPolicy alpha = cfg.alpha.kind == AlphaSetting::Kind::fixed
                                          ? AlphaPolicy::fixed(cfg.alpha.value)
                                          : AlphaPolicy::sampled();
            SuiteReport report;
            if (cfg.input_path) {
                auto instances = load_instances(*cfg.input_path, cfg.id,
                                                Dimension(alpha.value), cfg.r);
                merge_flag_params(cfg, instances);
                report = run_instances(to_suite_config(cfg, alpha), instances);
            } else {
                report = run_suite(to_suite_config(cfg, alpha));
            }
            if (cfg.format == OutputFormat::json)
                write_report_json(os, report);
            else
                write_reports_csv(os, std::span<const SuiteReport>(&report, 1));
            return report.violations == 0 ? 0 : 1;
        }
        case Command::sweep: {
            std::vector<SuiteReport> reports;
            for (double a : cfg.alpha.grid) {
                const AlphaPolicy alpha = AlphaPolicy::fixed(a);
                if (cfg.input_path) {
                    auto instances =
                        load_instances(*cfg.input_path, cfg.id, Dimension(a), cfg.r);
                    merge_flag_params(cfg, instances);
                    reports.push_back(run_instances(to_suite_config(cfg, alpha), instances));
                } else {
                    reports.push_back(run_suite(to_suite_config(cfg, alpha)));
                }
            }
            if (cfg.format == OutputFormat::json)
                write_reports_json(os, reports);
            else
                write_reports_csv(os, reports);
            bool any_violation = false;
            for (const SuiteReport& r : reports) any_violation |= r.violations > 0;
            return any_violation ? 1 : 0;
        }
        case Command::certify: {
            const auto start = std::chrono::steady_clock::now();
            CertifyReport rep;
            rep.id = cfg.id;
            rep.variant = cfg.variant;
            rep.regime = cfg.regime;
            rep.params = certify_params(cfg);
            if (rep.params.pair) rep.regime = rep.params.pair->regime;
            rep.tol = cfg.tol;
            rep.seed = cfg.seed;
            rep.samples = cfg.trials;
            rep.region = cfg.region;
            rep.budget = cfg.budget;
            rep.delta = cfg.delta;
            const double alpha_value =
                cfg.alpha.kind == AlphaSetting::Kind::fixed ? cfg.alpha.value : 1.0;
            const Dimension dim(alpha_value);
            const ShapeHint shape{std::max<std::size_t>(cfg.size_hint, 2),
                                  std::max<std::size_t>(cfg.size_hint, 2)};
            rep.manifold_max_gap = check_equality_manifold(
                cfg.id, rep.params, dim, cfg.trials, shape, cfg.seed, cfg.tol);
            rep.certificate = minimize_gap(cfg.id, rep.params, dim, shape, cfg.region,
                                           cfg.restarts, cfg.budget, cfg.tol);
            TrialRng rng(trial_key(cfg.seed, 0));
            const InstanceSpec point = manifold_point(cfg.id, rep.params, dim, shape, rng);
            rep.perturb_strict = perturb_check(cfg.id, rep.params, point, cfg.delta, cfg.tol);
            rep.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            if (cfg.format == OutputFormat::json)
                write_certify_json(os, rep);
            else
                write_certify_csv(os, rep);
            return rep.passed() ? 0 : 1;
        }
        case Command::counterexample: {
            const auto start = std::chrono::steady_clock::now();
            const AlphaPolicy alpha = cfg.alpha.kind == AlphaSetting::Kind::fixed
                                          ? AlphaPolicy::fixed(cfg.alpha.value)
                                          : AlphaPolicy::sampled();
            const SuiteConfig sc = to_suite_config(cfg, alpha);
            validate_config(sc);
            CounterexampleReport rep;
            rep.id = cfg.id;
            rep.variant = cfg.variant;
            rep.regime = cfg.regime;
            rep.trials = cfg.trials;
            rep.seed = cfg.seed;
            rep.alpha = cfg.alpha;
            rep.tol = cfg.tol;
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                TrialRng rng(trial_key(cfg.seed, t));
                TrialInstance ti = sample_instance(sc, rng);
                const Verdict v = evaluate(cfg.id, ti.spec, ti.params, cfg.variant, cfg.tol);
                rep.trials_searched = t + 1;
                if (v.status == Status::violation) {
                    rep.found = true;
                    rep.violation = WorstCase{ti, v, t};
                    TrialInstance small = shrink(cfg.id, cfg.variant, ti, cfg.tol);
                    rep.shrunk_verdict =
                        evaluate(cfg.id, small.spec, small.params, cfg.variant, cfg.tol);
                    rep.shrunk = std::move(small);
                    break;
                }
            }
            rep.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            if (cfg.format == OutputFormat::json)
                write_counterexample_json(os, rep);
            else
                write_counterexample_csv(os, rep);
            return rep.found ? 1 : 0;
        }
    }
    throw UsageError("unknown command");
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    try {
        const RunConfig cfg = parse_args(argc, argv);
        std::ostringstream body;
        const int code = execute(cfg, body);
        if (cfg.out_path) {
            std::ofstream out(*cfg.out_path);
            if (!out) throw IoError("cannot open output path " + *cfg.out_path);
            out << body.str();
            if (!out) throw IoError("failed writing output path " + *cfg.out_path);
        } else {
            std::cout << body.str();
        }
        return code;
    } catch (const HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace alphaineq
