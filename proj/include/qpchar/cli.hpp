#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpchar/conjugation_check.hpp"
#include "qpchar/fermionic.hpp"
#include "qpchar/module_spec.hpp"
#include "qpchar/pbw_oracle.hpp"
#include "qpchar/qp_enum.hpp"
#include "qpchar/series.hpp"
#include "qpchar/table_io.hpp"

namespace qpchar::cli {

enum class Command { character, verify };
enum class Space { standard, verma };
enum class Method { fermionic, enumerate, pbw_product, pbw_enumerate };
enum class Check { identity, basis, pbw, conjugation, stabilize };
enum class Format { json, csv };

inline constexpr unsigned default_qmax_ceiling = 16;
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    Command command = Command::character;
    std::optional<Space> space;
    std::optional<std::uint32_t> level;
    unsigned qmax = 0;
    Method method = Method::fermionic;
    Check check = Check::identity;
    Format format = Format::csv;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;

    ModuleSpec module() const {
        return space == Space::standard ? ModuleSpec::standard(*level) : ModuleSpec::verma();
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ceiling on --qmax; QPCHAR_QMAX_CEILING may raise it.
inline unsigned qmax_ceiling() {
    const char* env = std::getenv("QPCHAR_QMAX_CEILING");
    if (!env || !*env) return default_qmax_ceiling;
    try {
        const unsigned long v = std::stoul(env);
        return std::max<unsigned long>(v, default_qmax_ceiling);
    } catch (const std::exception&) {
        throw UsageError("QPCHAR_QMAX_CEILING is not a non-negative integer");
    }
}

/// Parses argv[1..] into a RunConfig, checking every flag combination.
/// Returns nullopt when help was printed.
inline std::optional<RunConfig> parse_args(const std::vector<std::string>& args, unsigned ceiling,
                                           std::ostream& out) {
    CLI::App app{"Graded characters of G2 principal subspaces", "qpchar"};
    app.require_subcommand(1);

    const std::map<std::string, Space> spaces{{"L", Space::standard}, {"N", Space::verma}};
    const std::map<std::string, Method> methods{{"fermionic", Method::fermionic},
                                                {"enumerate", Method::enumerate},
                                                {"pbw-product", Method::pbw_product},
                                                {"pbw-enumerate", Method::pbw_enumerate}};
    const std::map<std::string, Check> checks{{"identity", Check::identity},
                                              {"basis", Check::basis},
                                              {"pbw", Check::pbw},
                                              {"conjugation", Check::conjugation},
                                              {"stabilize", Check::stabilize}};
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

    RunConfig cfg;
    std::string space, method = "fermionic", format = "csv", check;
    std::uint32_t level = 0;

    // Accept only the listed names.
    auto names = [](const auto& m) {
        std::vector<std::string> keys;
        for (const auto& [k, v] : m) keys.push_back(k);
        return keys;
    };
    auto choice = [&](CLI::App* sub, const std::string& flag, std::string& target, const auto& m,
                      const std::string& desc, bool fold_case = false) {
        const auto keys = names(m);
        std::string text;
        for (const auto& k : keys) text += (text.empty() ? "" : "|") + k;
        auto* opt = sub->add_option(flag, target, desc)->option_text(text);
        if (fold_case)
            opt->check(CLI::IsMember(keys, CLI::ignore_case));
        else
            opt->check(CLI::IsMember(keys));
        return opt;
    };

    auto* chr = app.add_subcommand("char", "Print a character as a coefficient table");
    auto* ver = app.add_subcommand("verify", "Compare two independent computations");

    std::array<CLI::Option*, 2> space_opts{}, level_opts{}, qmax_opts{};
    const std::array<CLI::App*, 2> subs{chr, ver};
    for (std::size_t i = 0; i < subs.size(); ++i) {
        space_opts[i] =
            choice(subs[i], "--space", space, spaces, "L (standard) or N (generalized Verma)", true);
        level_opts[i] = subs[i]->add_option("--level", level, "level k of L(k Lambda_0)")
                            ->check(CLI::PositiveNumber);
        qmax_opts[i] = subs[i]->add_option("--qmax", cfg.qmax, "q-truncation degree");
    }
    choice(chr, "--method", method, methods, "computation route (default fermionic)");
    choice(chr, "--format", format, formats, "output format (default csv)");
    choice(ver, "--check", check, checks, "which verification to run")->required();
    auto* trials_opt =
        ver->add_option("--trials", cfg.trials, "random trials")->check(CLI::PositiveNumber);
    auto* seed_opt = ver->add_option("--seed", cfg.seed, "random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const std::size_t idx = chr->parsed() ? 0 : 1;
    cfg.command = idx == 0 ? Command::character : Command::verify;
    if (space_opts[idx]->count()) {
        for (auto& c : space) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        cfg.space = spaces.at(space);
    }
    cfg.method = methods.at(method);
    cfg.format = formats.at(format);
    if (idx == 1) cfg.check = checks.at(check);
    if (level_opts[idx]->count()) cfg.level = level;
    const bool has_qmax = qmax_opts[idx]->count() > 0;

    if (cfg.level && cfg.space != Space::standard)
        throw UsageError("--level is only meaningful with --space L");
    if (cfg.space == Space::standard && !cfg.level)
        throw UsageError("--space L requires --level");
    if (has_qmax && cfg.qmax > ceiling)
        throw UsageError("--qmax " + std::to_string(cfg.qmax) + " exceeds the ceiling " +
                         std::to_string(ceiling) + " (raise it with QPCHAR_QMAX_CEILING)");

    if (cfg.command == Command::character) {
        if (!cfg.space) throw UsageError("char requires --space");
        if (!has_qmax) throw UsageError("char requires --qmax");
        if ((cfg.method == Method::pbw_product || cfg.method == Method::pbw_enumerate) &&
            cfg.space != Space::verma)
            throw UsageError("pbw methods are only valid with --space N");
        return cfg;
    }

    const bool conj = cfg.check == Check::conjugation;
    if (!conj && (trials_opt->count() || seed_opt->count()))
        throw UsageError("--trials and --seed apply only to --check conjugation");
    if (conj) {
        if (cfg.space || has_qmax) throw UsageError("--check conjugation takes no --space or --qmax");
        return cfg;
    }
    if (!has_qmax) throw UsageError("verify requires --qmax");
    if (cfg.check == Check::basis) {
        if (!cfg.space) throw UsageError("--check basis requires --space");
    } else if (cfg.space) {
        throw UsageError("--space applies only to --check basis");
    }
    return cfg;
}

/// The character selected by a char configuration.
inline TruncatedSeries compute_character(const RunConfig& cfg) {
    switch (cfg.method) {
        case Method::fermionic: return character_fermionic(cfg.module(), cfg.qmax);
        case Method::enumerate: return enumerate_basis(cfg.module(), cfg.qmax);
        case Method::pbw_product: return product_side(cfg.qmax);
        case Method::pbw_enumerate: return pbw_enumerated(cfg.qmax);
    }
    throw std::logic_error("unknown method");
}

inline int run_char(const RunConfig& cfg, std::ostream& out) {
    const auto s = compute_character(cfg);
    if (cfg.format == Format::csv)
        write_csv(out, s);
    else
        write_json(out, s);
    return exit_ok;
}

namespace detail {

inline std::string show_key(SeriesKey k) {
    return "(" + std::to_string(k.q_deg) + "," + std::to_string(k.y1_deg) + "," +
           std::to_string(k.y2_deg) + ")";
}

inline int compare(std::ostream& out, const std::string& label, const std::string& lhs_name,
                   const TruncatedSeries& lhs, const std::string& rhs_name,
                   const TruncatedSeries& rhs) {
    if (auto m = first_mismatch(lhs, rhs)) {
        out << label << ": MISMATCH at (q,y1,y2)=" << show_key(m->key) << ": " << lhs_name
            << "=" << m->lhs.str() << " " << rhs_name << "=" << m->rhs.str() << '\n';
        return exit_mismatch;
    }
    out << label << ": " << lhs_name << " == " << rhs_name << " through q^" << lhs.truncation()
        << " (" << lhs.size() << " terms) ok\n";
    return exit_ok;
}

}  // namespace detail

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
    const unsigned d = cfg.qmax;
    const std::string n = "(" + std::to_string(d) + ")";
    switch (cfg.check) {
        case Check::identity:
            return detail::compare(out, "identity", "product_side" + n, product_side(d),
                                   "fermionic[N]" + n, character_fermionic(ModuleSpec::verma(), d));
        case Check::basis: {
            const auto spec = cfg.module();
            return detail::compare(out, "basis", "enumerate[" + spec.name() + "]" + n,
                                   enumerate_basis(spec, d), "fermionic[" + spec.name() + "]" + n,
                                   character_fermionic(spec, d));
        }
        case Check::pbw:
            return detail::compare(out, "pbw", "pbw_enumerated" + n, pbw_enumerated(d),
                                   "product_side" + n, product_side(d));
        case Check::stabilize: {
            // Level D is the smallest level whose caps cannot bind below q^D; level 1 covers D = 0.
            const auto spec = ModuleSpec::standard(std::max(d, 1u));
            return detail::compare(out, "stabilize", "fermionic[" + spec.name() + "]" + n,
                                   character_fermionic(spec, d), "fermionic[N]" + n,
                                   character_fermionic(ModuleSpec::verma(), d));
        }
        case Check::conjugation: {
            const auto report = check_exponent_identities(cfg.trials, cfg.seed);
            out << "conjugation: " << report.passed << "/" << report.trials << " ok\n";
            if (report.first_failure) out << "first failure: " << *report.first_failure << '\n';
            return report.ok() ? exit_ok : exit_mismatch;
        }
    }
    throw std::logic_error("unknown check");
}

/// Full command-line entry point; returns the process exit status.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto cfg = parse_args(args, qmax_ceiling(), out);
        if (!cfg) return exit_ok;
        return cfg->command == Command::character ? run_char(*cfg, out) : run_verify(*cfg, out);
    } catch (const UsageError& e) {
        err << "qpchar: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace qpchar::cli
