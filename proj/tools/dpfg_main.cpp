// Command-line front end: family value tables, the identity audit, the
// deformation-limit checks and raw series dumps, in CSV or JSON with output
// stable enough to pin golden files against.
//
// Exit codes: 0 success, 1 hard audit failure, 2 usage error.

#include "dpfg/audit.hpp"
#include "dpfg/families.hpp"
#include "dpfg/limits.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using dpfg::FamilyId;
using dpfg::FamilyInfo;
using dpfg::ParamSet;
using dpfg::Rational;

struct FamilyOpts {
    std::string family;
    int n_max = 0;
    int order = -1;
    std::string format = "json";
    std::string out;
    std::optional<std::string> lambda, u, x, y;
    std::optional<long long> k;
};

// Registers the shared family/parameter flags on one subcommand.
void add_family_flags(CLI::App* cmd, FamilyOpts& o, bool with_n_max, bool with_order) {
    cmd->add_option("--family", o.family, "family name, see `table --list`")->required();
    if (with_n_max) cmd->add_option("--n-max", o.n_max, "largest index n")->required();
    if (with_order) cmd->add_option("--order", o.order, "series truncation order override");
    cmd->add_option("--k", o.k, "poly order or second index, where the family has one");
    cmd->add_option("--lambda", o.lambda, "deformation parameter, as a rational like 1/3");
    cmd->add_option("--u", o.u, "weight parameter, any rational except 1");
    cmd->add_option("--x", o.x, "first argument");
    cmd->add_option("--y", o.y, "second argument");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "write to this file instead of stdout");
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: --out: cannot open '" << out_path << "'\n";
        return 2;
    }
    f << payload;
    return 0;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return 2;
}

const FamilyInfo* resolve_family(const std::string& name) {
    auto id = dpfg::family_from_name(name);
    if (!id) return nullptr;
    return &dpfg::family_info(*id);
}

// Every parameter the family consumes must be given explicitly; defaults
// would silently change what a golden file means.  The deformation flag is
// skipped for the limit sweep, which drives lambda itself.
int check_required(const FamilyInfo& info, const FamilyOpts& o, bool need_lambda) {
    auto missing = [&](const char* flag) {
        return usage_error(std::string("--") + flag + " is required for family " + info.name);
    };
    if (need_lambda && info.uses_lambda && !o.lambda) return missing("lambda");
    if (info.uses_u && !o.u) return missing("u");
    if (info.uses_x && !o.x) return missing("x");
    if (info.uses_y && !o.y) return missing("y");
    if (info.k_role != dpfg::KRole::None && !o.k) return missing("k");
    return 0;
}

// Fills a ParamSet from the provided flags, naming the offending flag on a
// parse failure.
int build_params(const FamilyOpts& o, ParamSet& p) {
    struct Slot {
        const char* flag;
        const std::optional<std::string>& text;
        Rational& target;
    };
    const Slot slots[] = {
        {"lambda", o.lambda, p.lambda},
        {"u", o.u, p.u},
        {"x", o.x, p.x},
        {"y", o.y, p.y},
    };
    for (const auto& s : slots) {
        if (!s.text) continue;
        try {
            s.target = Rational::parse(*s.text);
        } catch (const std::invalid_argument&) {
            return usage_error(std::string("--") + s.flag + ": cannot parse '" + *s.text +
                               "' as a rational");
        }
    }
    if (o.k) p.k = *o.k;
    p.n_max = o.n_max;
    return 0;
}

std::string csv_cell(const FamilyInfo& info, const ParamSet& p, char which) {
    switch (which) {
        case 'k':
            return info.k_role == dpfg::KRole::None ? "" : std::to_string(p.k);
        case 'l':
            return info.uses_lambda ? p.lambda.to_string() : "";
        case 'u':
            return info.uses_u ? p.u.to_string() : "";
        case 'x':
            return info.uses_x ? p.x.to_string() : "";
        case 'y':
            return info.uses_y ? p.y.to_string() : "";
    }
    return "";
}

nlohmann::json json_param(const FamilyInfo& info, const ParamSet& p, char which) {
    std::string cell = csv_cell(info, p, which);
    if (cell.empty()) return nullptr;
    if (which == 'k') return p.k;
    return cell;
}

int run_table(const FamilyOpts& o) {
    const FamilyInfo* info = resolve_family(o.family);
    if (!info) return usage_error("--family: unknown family '" + o.family + "'");
    if (int rc = check_required(*info, o, true)) return rc;
    ParamSet p;
    if (int rc = build_params(o, p)) return rc;

    std::vector<std::string> values;
    try {
        dpfg::validate_for(info->id, p);
        for (int n = 0; n <= o.n_max; ++n) {
            if (info->gaussian_valued) {
                values.push_back(dpfg::family_value_gaussian(info->id, p, n, o.order).to_string());
            } else {
                values.push_back(dpfg::family_value(info->id, p, n, o.order).to_string());
            }
        }
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    std::string payload;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "family,n,k,lambda,u,x,y,value\n";
        for (int n = 0; n <= o.n_max; ++n) {
            os << info->name << ',' << n << ',' << csv_cell(*info, p, 'k') << ','
               << csv_cell(*info, p, 'l') << ',' << csv_cell(*info, p, 'u') << ','
               << csv_cell(*info, p, 'x') << ',' << csv_cell(*info, p, 'y') << ',' << values[n]
               << '\n';
        }
        payload = os.str();
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 0; n <= o.n_max; ++n) {
            rows.push_back(nlohmann::json{{"family", info->name},
                                          {"n", n},
                                          {"k", json_param(*info, p, 'k')},
                                          {"lambda", json_param(*info, p, 'l')},
                                          {"u", json_param(*info, p, 'u')},
                                          {"x", json_param(*info, p, 'x')},
                                          {"y", json_param(*info, p, 'y')},
                                          {"value", values[n]}});
        }
        payload = dpfg::canonical_json(rows);
    }
    return emit(payload, o.out);
}

int run_series(const FamilyOpts& o) {
    const FamilyInfo* info = resolve_family(o.family);
    if (!info) return usage_error("--family: unknown family '" + o.family + "'");
    if (!info->has_series)
        return usage_error(std::string("--family: ") + info->name +
                           " is value-only and has no series to dump");
    if (int rc = check_required(*info, o, true)) return rc;
    if (o.order < 0) return usage_error("--order is required for series output");
    ParamSet p;
    if (int rc = build_params(o, p)) return rc;

    std::vector<std::string> coeffs;
    try {
        if (info->gaussian_valued) {
            dpfg::GaussianSeries s = dpfg::family_series_gaussian(info->id, p, o.order);
            for (int n = 0; n <= o.order; ++n) coeffs.push_back(s.coeff(n).to_string());
        } else {
            dpfg::RationalSeries s = dpfg::family_series(info->id, p, o.order);
            for (int n = 0; n <= o.order; ++n) coeffs.push_back(s.coeff(n).to_string());
        }
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    std::string payload;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "family,n,coefficient\n";
        for (int n = 0; n <= o.order; ++n)
            os << info->name << ',' << n << ',' << coeffs[n] << '\n';
        payload = os.str();
    } else {
        // Bare list, index = power of t; parameters are the caller's context.
        payload = dpfg::canonical_json(nlohmann::json(coeffs));
    }
    return emit(payload, o.out);
}

int run_limits(const FamilyOpts& o) {
    const FamilyInfo* info = resolve_family(o.family);
    if (!info) return usage_error("--family: unknown family '" + o.family + "'");
    if (!dpfg::limit_supported(info->id))
        return usage_error(std::string("--family: ") + info->name +
                           " has no deformation limit to check");
    if (int rc = check_required(*info, o, false)) return rc;
    ParamSet p;
    if (int rc = build_params(o, p)) return rc;

    dpfg::LimitReport rep;
    try {
        rep = dpfg::limit_check(info->id, p, o.n_max);
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    std::string payload;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "family,n,interpolated,classical,match\n";
        for (const auto& e : rep.entries) {
            os << info->name << ',' << e.n << ',' << e.interpolated << ',' << e.classical << ','
               << (e.match ? "true" : "false") << '\n';
        }
        payload = os.str();
    } else {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : rep.entries) {
            entries.push_back(nlohmann::json{{"n", e.n},
                                             {"interpolated", e.interpolated.to_string()},
                                             {"classical", e.classical.to_string()},
                                             {"match", e.match}});
        }
        payload = dpfg::canonical_json(nlohmann::json{{"family", info->name},
                                                      {"n_max", rep.n_max},
                                                      {"all_match", rep.all_match},
                                                      {"entries", std::move(entries)}});
    }
    // Mismatches are findings, not tool failures; the exit code stays 0.
    return emit(payload, o.out);
}

struct AuditOpts {
    std::uint64_t seed = 42;
    int n_max = 10;
    int samples = 3;
    std::string format = "json";
    std::string out;
    bool quiet = false;
};

int run_audit(const AuditOpts& o) {
    if (o.n_max < 0) return usage_error("--n-max must be nonnegative");
    if (o.samples < 1) return usage_error("--samples must be positive");
    dpfg::AuditReport rep = dpfg::audit_all(o.seed, o.n_max, o.samples);

    std::string payload;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "case,variant,verdict\n";
        for (const auto& c : rep.cases)
            for (const auto& v : c.variants)
                os << c.id << ',' << v.name << ',' << dpfg::verdict_name(v.verdict) << '\n';
        payload = os.str();
    } else {
        payload = dpfg::canonical_json(dpfg::report_to_json(rep));
    }
    if (int rc = emit(payload, o.out)) return rc;
    if (!o.quiet) std::cerr << dpfg::report_to_text(rep);
    return rep.has_hard_failure() ? 1 : 0;
}

int run_list() {
    std::ostringstream os;
    os << "family,parameters,summary\n";
    for (const auto& info : dpfg::family_table()) {
        std::string flags;
        if (info.k_role != dpfg::KRole::None) flags += "k ";
        if (info.uses_lambda) flags += "lambda ";
        if (info.uses_u) flags += "u ";
        if (info.uses_x) flags += "x ";
        if (info.uses_y) flags += "y ";
        if (!flags.empty()) flags.pop_back();
        os << info.name << ',' << flags << ',' << info.summary << '\n';
    }
    std::cout << os.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degenerate poly-Frobenius-Genocchi families: tables, audit, limits, series"};
    app.set_version_flag("--version", dpfg::kVersion);
    app.require_subcommand(1);

    FamilyOpts table_opts;
    CLI::App* table = app.add_subcommand("table", "emit family values for n = 0..n-max");
    add_family_flags(table, table_opts, true, true);

    FamilyOpts series_opts;
    CLI::App* series = app.add_subcommand("series", "dump raw series coefficients");
    add_family_flags(series, series_opts, false, true);

    FamilyOpts limits_opts;
    CLI::App* limits = app.add_subcommand("limits", "check deformation limits by interpolation");
    add_family_flags(limits, limits_opts, true, false);

    AuditOpts audit_opts;
    CLI::App* audit = app.add_subcommand("audit", "run the identity audit and emit the report");
    audit->add_option("--seed", audit_opts.seed, "sampling seed");
    audit->add_option("--n-max", audit_opts.n_max, "largest index checked per identity");
    audit->add_option("--samples", audit_opts.samples, "parameter points per identity");
    audit->add_option("--format", audit_opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    audit->add_option("--out", audit_opts.out, "write the report to this file instead of stdout");
    audit->add_flag("--quiet", audit_opts.quiet, "suppress the text summary on stderr");

    CLI::App* families = app.add_subcommand("families", "list every family and its parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*table) return run_table(table_opts);
    if (*series) return run_series(series_opts);
    if (*limits) return run_limits(limits_opts);
    if (*audit) return run_audit(audit_opts);
    if (*families) return run_list();
    return 2;
}
