#include "novbott/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "novbott/corpus.hpp"
#include "novbott/documents.hpp"
#include "novbott/errors.hpp"
#include "novbott/hodge.hpp"
#include "novbott/morse_bott.hpp"
#include "novbott/spectral.hpp"
#include "novbott/twisted.hpp"

namespace novbott::cli {

namespace {

std::string fmt_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* strategy_label(RankStrategy s) {
    return s == RankStrategy::exact ? "exact" : "randomized";
}

// Document references are file paths first, built-in example names second.
Json load_document(const std::string& ref) {
    std::error_code ec;
    if (std::filesystem::exists(ref, ec)) return load_json_file(ref);
    try {
        return parse_json_text(corpus_document_text(ref));
    } catch (const invalid_input&) {
        std::string msg = "no file or built-in example named '" + ref + "'; built-in examples:";
        for (const std::string& n : corpus_names()) msg += " " + n;
        throw invalid_input(msg);
    }
}

std::string trimmed(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

// "1,1/2;3,-2" -> {(1, 1/2), (3, -2)}; points split on ';', coords on ','.
std::vector<std::vector<Rational>> parse_probes(const std::string& text) {
    std::vector<std::vector<Rational>> points;
    std::stringstream stream(text);
    std::string chunk;
    while (std::getline(stream, chunk, ';')) {
        std::vector<Rational> point;
        std::stringstream coords(chunk);
        std::string coord;
        while (std::getline(coords, coord, ',')) {
            const std::string t = trimmed(coord);
            if (t.empty()) throw invalid_input("empty probe coordinate in '" + text + "'");
            point.push_back(parse_rational(t));
        }
        points.push_back(std::move(point));
    }
    if (points.empty()) throw invalid_input("no probe points given");
    return points;
}

Json rational_vector_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const Rational& r : v) arr.push_back(rational_to_string(r));
    return arr;
}

Json qmatrix_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json bigint_vector_json(const std::vector<BigInt>& v) {
    Json arr = Json::array();
    for (const BigInt& c : v) arr.push_back(c.get_str());
    return arr;
}

std::string dims_string(const std::vector<std::size_t>& dims) {
    std::ostringstream s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s << " ";
        s << dims[i];
    }
    return s.str();
}

struct CommandResult {
    int code = kExitOk;
    Json report;
    std::string table;
    std::string csv;
    bool has_csv = false;
};

void describe_strategy(Json& rep, std::ostringstream& t, const RunConfig& cfg,
                       const RankOptions& opts) {
    rep["strategy"] = strategy_label(opts.strategy);
    t << "strategy: " << strategy_label(opts.strategy);
    if (opts.strategy == RankStrategy::randomized) {
        rep["prime"] = opts.prime;
        rep["trials"] = opts.trials;
        rep["seed"] = cfg.seed;
        t << " (prime " << opts.prime << ", trials " << opts.trials << ", seed " << cfg.seed
          << ")";
    }
    t << "\n";
}

CommandResult cmd_novikov(const Json& doc, const RunConfig& cfg) {
    if (document_format(doc) != kComplexFormat) {
        throw invalid_input("novikov needs a " + std::string(kComplexFormat) + " document");
    }
    const TwistedComplex tc = build_complex(complex_from_json(doc));
    const RankOptions opts = rank_options(cfg);
    const NovikovResult res = novikov_numbers(tc, opts);
    const long long chi_times_fiber = euler_characteristic(tc);
    const long long chi = chi_times_fiber / static_cast<long long>(tc.fiber_dim);

    std::vector<std::string> over;
    for (std::size_t b : res.betti) {
        Rational q(static_cast<unsigned long>(b));
        q /= Rational(static_cast<unsigned long>(tc.fiber_dim));
        over.push_back(rational_to_string(q));
    }

    CommandResult out;
    Json& rep = out.report;
    std::ostringstream t;
    rep["command"] = "novikov";
    rep["name"] = tc.name;
    t << "twisted complex: " << tc.name << "\n";
    describe_strategy(rep, t, cfg, opts);
    rep["fiber_dim"] = tc.fiber_dim;
    rep["betti"] = res.betti;
    rep["betti_over_fiber"] = over;
    rep["euler"] = chi;
    rep["euler_times_fiber"] = chi_times_fiber;
    rep["failure_bound"] = res.failure_bound;

    t << "degree | betti | betti/fiber\n";
    for (std::size_t p = 0; p < res.betti.size(); ++p) {
        t << std::setw(6) << p << " | " << std::setw(5) << res.betti[p] << " | " << over[p]
          << "\n";
    }
    t << "euler characteristic: " << chi << " (fiber-scaled " << chi_times_fiber << ")\n";
    t << "rank failure bound: " << fmt_g17(res.failure_bound) << "\n";
    out.table = t.str();
    return out;
}

CommandResult cmd_check(const Json& first, const Json& second, const RunConfig& cfg) {
    const Json* morse_doc = nullptr;
    const Json* other_doc = nullptr;
    if (document_format(first) == kMorseFormat) {
        morse_doc = &first;
        other_doc = &second;
    } else if (document_format(second) == kMorseFormat) {
        morse_doc = &second;
        other_doc = &first;
    } else {
        throw invalid_input("check needs one " + std::string(kMorseFormat) + " document");
    }
    const MorseDocument md = morse_from_json(*morse_doc);

    std::vector<std::size_t> betti;
    std::size_t fiber = 1;
    std::string other_name;
    std::optional<long long> chi_times_fiber;
    double failure_bound = 0.0;
    const std::string other_format = document_format(*other_doc);
    const RankOptions opts = rank_options(cfg);
    if (other_format == kComplexFormat) {
        const TwistedComplex tc = build_complex(complex_from_json(*other_doc));
        const NovikovResult res = novikov_numbers(tc, opts);
        betti = res.betti;
        failure_bound = res.failure_bound;
        fiber = tc.fiber_dim;
        chi_times_fiber = euler_characteristic(tc);
        other_name = tc.name;
    } else if (other_format == kBettiFormat) {
        const BettiDocument bd = betti_from_json(*other_doc);
        betti = bd.betti;
        fiber = bd.fiber_dim;
        other_name = bd.name;
    } else {
        throw invalid_input("check compares morse data against a " +
                            std::string(kComplexFormat) + " or " + std::string(kBettiFormat) +
                            " document");
    }
    if (md.data.fiber_dim != fiber) {
        throw invalid_input("fiber dimensions disagree: counting data has " +
                            std::to_string(md.data.fiber_dim) + ", cohomology has " +
                            std::to_string(fiber));
    }

    IntPolynomial m = morse_polynomial(md.data);
    if (fiber > 1) {
        m = m * IntPolynomial(std::vector<BigInt>{BigInt(static_cast<unsigned long>(fiber))});
    }
    const IntPolynomial n = novikov_polynomial(betti);
    const FactorizationCertificate cert = check_main_theorem(m, n);
    const auto rows = strong_inequality_table(m, betti);
    const BigInt m_at = m.evaluate(BigInt(-1));
    const BigInt n_at = n.evaluate(BigInt(-1));
    const bool euler_match =
        m_at == n_at &&
        (!chi_times_fiber || m_at == BigInt(static_cast<long>(*chi_times_fiber)));

    CommandResult out;
    out.code = cert.holds ? kExitOk : kExitNegative;
    Json& rep = out.report;
    std::ostringstream t;
    rep["command"] = "check";
    rep["counting"] = md.name;
    rep["cohomology"] = other_name;
    t << "counting data: " << md.name << "\n";
    t << "cohomology: " << other_name << "\n";
    describe_strategy(rep, t, cfg, opts);
    rep["fiber_dim"] = fiber;
    rep["betti"] = betti;
    rep["failure_bound"] = failure_bound;
    rep["counting_polynomial"] = bigint_vector_json(m.coefficients());
    rep["cohomology_polynomial"] = bigint_vector_json(n.coefficients());
    rep["difference"] = bigint_vector_json(cert.difference.coefficients());
    rep["quotient"] = bigint_vector_json(cert.quotient.coefficients());
    rep["remainder"] = cert.remainder.get_str();
    rep["holds"] = cert.holds;

    t << "fiber dimension: " << fiber << "\n";
    t << "counting polynomial   M = " << m.to_string() << "\n";
    t << "cohomology polynomial N = " << n.to_string() << "\n";
    t << "difference        M - N = " << cert.difference.to_string() << "\n";
    t << "quotient Q = " << cert.quotient.to_string() << ", remainder = "
      << cert.remainder.get_str() << "\n";
    t << "factorization M - N = (1+λ)·Q with Q ≥ 0: " << (cert.holds ? "holds" : "fails")
      << "\n";

    Json strong = Json::array();
    t << "degree | alt sum M | alt sum N | holds\n";
    bool strong_all = true;
    for (const StrongInequalityRow& row : rows) {
        Json jrow;
        jrow["degree"] = row.p;
        jrow["lhs"] = rational_to_string(row.lhs);
        jrow["rhs"] = rational_to_string(row.rhs);
        jrow["holds"] = row.holds;
        strong.push_back(std::move(jrow));
        strong_all = strong_all && row.holds;
        t << std::setw(6) << row.p << " | " << std::setw(9) << rational_to_string(row.lhs)
          << " | " << std::setw(9) << rational_to_string(row.rhs) << " | "
          << (row.holds ? "yes" : "NO") << "\n";
    }
    rep["strong_inequalities"] = std::move(strong);
    rep["strong_inequalities_hold"] = strong_all;

    rep["euler_counting"] = m_at.get_str();
    rep["euler_cohomology"] = n_at.get_str();
    if (chi_times_fiber) rep["euler_complex"] = *chi_times_fiber;
    rep["euler_match"] = euler_match;
    t << "euler: M(-1) = " << m_at.get_str() << ", N(-1) = " << n_at.get_str();
    if (chi_times_fiber) t << ", complex gives " << *chi_times_fiber;
    t << (euler_match ? ": consistent" : ": MISMATCH") << "\n";

    Json comps = Json::array();
    if (!md.data.components.empty()) t << "components:\n";
    for (const CriticalComponent& z : md.data.components) {
        const long long chi_z = component_euler(z, md.data.fiber_dim);
        Json jz;
        jz["name"] = z.name;
        jz["index"] = z.index;
        jz["euler"] = chi_z;
        comps.push_back(std::move(jz));
        t << "  " << z.name << ": index " << z.index << ", euler " << chi_z << "\n";
    }
    rep["components"] = std::move(comps);
    out.table = t.str();
    return out;
}

CommandResult cmd_ss(const Json& doc, const RunConfig& cfg) {
    if (document_format(doc) != kFamilyFormat) {
        throw invalid_input("ss needs a " + std::string(kFamilyFormat) + " document");
    }
    const DeformationFamily fam = family_from_json(doc);
    const std::size_t window = cfg.order == 0 ? fam.order : cfg.order;

    std::vector<SpectralPage> pages;
    for (std::size_t r = 1; r <= std::max<std::size_t>(window, 1); ++r) {
        pages.push_back(page(fam, r));
    }
    bool stabilized = false;
    std::size_t stabilized_at = 0;
    for (std::size_t start = 0; start + 1 < pages.size(); ++start) {
        bool all_equal = true;
        for (std::size_t k = start + 1; k < pages.size(); ++k) {
            all_equal = all_equal && pages[k].dims == pages[start].dims;
        }
        if (all_equal) {
            stabilized = true;
            stabilized_at = start + 1;
            break;
        }
    }
    const std::vector<std::size_t>& limit =
        stabilized ? pages[stabilized_at - 1].dims : pages.back().dims;

    CommandResult out;
    Json& rep = out.report;
    std::ostringstream t;
    rep["command"] = "ss";
    rep["name"] = fam.name;
    rep["base_point"] = rational_to_string(fam.base_point);
    rep["order"] = fam.order;
    rep["window"] = window;
    t << "family: " << fam.name << " (order " << fam.order << ", base point "
      << rational_to_string(fam.base_point) << ")\n";

    Json jpages = Json::array();
    t << "page | dims\n";
    for (const SpectralPage& pg : pages) {
        Json jp;
        jp["r"] = pg.r;
        jp["dims"] = pg.dims;
        Json diffs = Json::array();
        for (const QMatrix& d : pg.differentials) diffs.push_back(qmatrix_json(d));
        jp["differentials"] = std::move(diffs);
        jpages.push_back(std::move(jp));
        t << std::setw(4) << pg.r << " | " << dims_string(pg.dims) << "\n";
    }
    rep["pages"] = std::move(jpages);

    if (!pages.empty()) {
        const SpectralPage& first = pages.front();
        for (std::size_t p = 0; p < first.differentials.size(); ++p) {
            const QMatrix& d = first.differentials[p];
            if (d.rows() == 0 || d.cols() == 0) continue;
            t << "d_1 (degree " << p << " -> " << p + 1 << "):\n";
            for (std::size_t i = 0; i < d.rows(); ++i) {
                t << "    ";
                for (std::size_t j = 0; j < d.cols(); ++j) {
                    if (j) t << " ";
                    t << rational_to_string(d.at(i, j));
                }
                t << "\n";
            }
        }
    }

    rep["stabilized"] = stabilized;
    if (stabilized) rep["stabilized_at"] = stabilized_at;
    rep["limit"] = limit;
    if (stabilized) {
        t << "stabilized: yes, from page " << stabilized_at << "\n";
    } else {
        t << "stabilized: not within the truncation window\n";
    }
    t << "limit dims: " << dims_string(limit) << "\n";
    out.table = t.str();
    return out;
}

CommandResult cmd_spectrum(const Json& doc, const RunConfig& cfg,
                           const std::string& probes_text,
                           const std::vector<double>& s_values) {
    if (document_format(doc) != kComplexFormat) {
        throw invalid_input("spectrum needs a " + std::string(kComplexFormat) + " document");
    }
    if (!probes_text.empty() && !s_values.empty()) {
        throw invalid_input("give either --probes or s values, not both");
    }
    const TwistedComplex tc = build_complex(complex_from_json(doc));
    const RankOptions opts = rank_options(cfg);

    CommandResult out;
    Json& rep = out.report;
    std::ostringstream t;

    if (!probes_text.empty()) {
        const JumpScanReport scan = jump_scan(tc, parse_probes(probes_text), opts);
        rep["command"] = "spectrum";
        rep["mode"] = "probes";
        rep["name"] = tc.name;
        t << "twisted complex: " << tc.name << "\n";
        describe_strategy(rep, t, cfg, opts);
        rep["fiber_dim"] = tc.fiber_dim;
        rep["background"] = scan.background;
        rep["failure_bound"] = scan.failure_bound;
        t << "background: " << dims_string(scan.background) << " (failure bound "
          << fmt_g17(scan.failure_bound) << ")\n";
        Json jprobes = Json::array();
        t << "point | dims | dims/fiber | jump degrees\n";
        for (const JumpProbe& probe : scan.probes) {
            Json jp;
            jp["point"] = rational_vector_json(probe.point);
            jp["dims"] = probe.dims;
            Json over = Json::array();
            std::vector<std::string> over_str;
            for (std::size_t dim : probe.dims) {
                Rational q(static_cast<unsigned long>(dim));
                q /= Rational(static_cast<unsigned long>(tc.fiber_dim));
                over_str.push_back(rational_to_string(q));
                over.push_back(over_str.back());
            }
            jp["dims_over_fiber"] = std::move(over);
            Json jumps = Json::array();
            std::string jump_list;
            for (std::size_t p = 0; p < probe.is_jump.size(); ++p) {
                if (!probe.is_jump[p]) continue;
                jumps.push_back(p);
                if (!jump_list.empty()) jump_list += " ";
                jump_list += std::to_string(p);
            }
            jp["jump_degrees"] = std::move(jumps);
            jprobes.push_back(std::move(jp));
            t << "(";
            for (std::size_t i = 0; i < probe.point.size(); ++i) {
                if (i) t << ", ";
                t << rational_to_string(probe.point[i]);
            }
            t << ") | " << dims_string(probe.dims) << " | ";
            for (std::size_t i = 0; i < over_str.size(); ++i) {
                if (i) t << " ";
                t << over_str[i];
            }
            t << " | " << (jump_list.empty() ? "none" : jump_list) << "\n";
        }
        rep["probes"] = std::move(jprobes);
        out.table = t.str();
        return out;
    }

    const KernelComparison comp = kernel_vs_exact(tc, s_values, cfg.epsilon, opts);
    rep["command"] = "spectrum";
    rep["mode"] = "eigenvalues";
    rep["name"] = tc.name;
    t << "twisted complex: " << tc.name << "\n";
    describe_strategy(rep, t, cfg, opts);
    rep["fiber_dim"] = tc.fiber_dim;
    rep["epsilon"] = cfg.epsilon;
    rep["background"] = comp.background;
    rep["failure_bound"] = comp.failure_bound;
    t << "background: " << dims_string(comp.background) << " (failure bound "
      << fmt_g17(comp.failure_bound) << ", epsilon " << fmt_g17(cfg.epsilon) << ")\n";

    std::string csv = "s,degree,index,eigenvalue\n";
    Json jcells = Json::array();
    t << "s | degree | kernel | background | separation | conclusive | match\n";
    bool any_inconclusive = false;
    bool any_conclusive_mismatch = false;
    for (const KernelCell& cell : comp.cells) {
        for (std::size_t i = 0; i < cell.eigenvalues.size(); ++i) {
            csv += fmt_g17(cell.s);
            csv += ",";
            csv += std::to_string(cell.degree);
            csv += ",";
            csv += std::to_string(i);
            csv += ",";
            csv += fmt_g17(cell.eigenvalues[i]);
            csv += "\n";
        }
        Json jc;
        jc["s"] = cell.s;
        jc["degree"] = cell.degree;
        jc["eigenvalues"] = cell.eigenvalues;
        jc["numeric_kernel"] = cell.numeric_kernel;
        jc["exact_background"] = cell.exact_background;
        jc["separation"] = fmt_g17(cell.separation);
        jc["conclusive"] = cell.conclusive;
        jc["match"] = cell.match;
        jcells.push_back(std::move(jc));
        any_inconclusive = any_inconclusive || !cell.conclusive;
        any_conclusive_mismatch = any_conclusive_mismatch || (cell.conclusive && !cell.match);
        t << fmt_g17(cell.s) << " | " << cell.degree << " | " << cell.numeric_kernel << " | "
          << cell.exact_background << " | " << fmt_g17(cell.separation) << " | "
          << (cell.conclusive ? "yes" : "NO") << " | " << (cell.match ? "yes" : "NO") << "\n";
    }
    rep["cells"] = std::move(jcells);
    if (any_conclusive_mismatch) {
        t << "kernel mismatch against the exact background\n";
        out.code = kExitNegative;
    } else if (any_inconclusive) {
        t << "some cells are inconclusive at this epsilon\n";
        out.code = kExitInconclusive;
    } else if (!comp.cells.empty()) {
        t << "all cells conclusive and matching\n";
    }
    out.csv = std::move(csv);
    out.has_csv = true;
    out.table = t.str();
    return out;
}

CommandResult cmd_examples(const std::string& name, const RunConfig&) {
    CommandResult out;
    if (name.empty() || name == "list") {
        Json names = Json::array();
        std::string table;
        for (const std::string& n : corpus_names()) {
            names.push_back(n);
            table += n;
            table += "\n";
        }
        out.report["command"] = "examples";
        out.report["names"] = std::move(names);
        out.table = std::move(table);
        return out;
    }
    const std::string& text = corpus_document_text(name);
    out.report = parse_json_text(text);
    out.table = text;
    out.table += "\n";
    return out;
}

int emit(const RunConfig& cfg, const CommandResult& result, std::ostream& out) {
    std::string payload;
    if (cfg.format == "csv") {
        if (!result.has_csv) {
            throw invalid_input("csv output is only available for spectrum eigenvalue listings");
        }
        payload = result.csv;
    } else if (cfg.format == "json-like") {
        payload = result.report.dump(2);
        payload += "\n";
    } else {
        payload = result.table;
    }
    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) throw invalid_input("cannot open output file '" + cfg.out_path + "'");
        file << payload;
    } else {
        out << payload;
    }
    return result.code;
}

}  // namespace

RankOptions rank_options(const RunConfig& cfg) {
    RankOptions opts;
    opts.strategy = cfg.strategy;
    opts.prime = cfg.prime;
    opts.trials = cfg.trials;
    opts.seed = cfg.seed;
    return opts;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{
        "twisted cochain complexes: background cohomology, counting-polynomial "
        "certificates, deformation spectral sequences, numeric Laplacian cross-checks"};
    app.require_subcommand(1);

    std::string strategy_text = "randomized";
    app.add_option("--seed", cfg.seed, "seed for randomized rank evaluation");
    app.add_option("--strategy", strategy_text, "rank strategy: randomized or exact")
        ->check(CLI::IsMember({"randomized", "exact"}));
    app.add_option("--prime", cfg.prime, "modulus for randomized ranks (prime, at least 2^30)");
    app.add_option("--trials", cfg.trials, "evaluation points per randomized rank");
    app.add_option("--epsilon", cfg.epsilon, "numeric kernel threshold");
    app.add_option("--order", cfg.order, "page bound for ss (default: the family order)");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json-like", "csv"}));
    app.add_option("--out", cfg.out_path, "write the payload to this file instead of stdout");

    std::string doc_ref;
    std::string doc_ref2;
    std::string probes_text;
    std::string examples_name = "list";
    std::vector<double> s_values;

    CLI::App* novikov = app.add_subcommand(
        "novikov", "background cohomology dimensions of a twisted complex");
    novikov->add_option("document", doc_ref, "complex document (file path or example name)")
        ->required();
    novikov->fallthrough();

    CLI::App* check = app.add_subcommand(
        "check", "factorization and inequality certificates for counting data");
    check->add_option("counting", doc_ref, "morse document (file path or example name)")
        ->required();
    check->add_option("cohomology", doc_ref2, "complex or betti document")->required();
    check->fallthrough();

    CLI::App* ss =
        app.add_subcommand("ss", "deformation spectral sequence of a polynomial family");
    ss->add_option("document", doc_ref, "family document (file path or example name)")
        ->required();
    ss->fallthrough();

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "deformed Laplacian spectra, or exact dimension probes with --probes");
    spectrum->add_option("document", doc_ref, "complex document (file path or example name)")
        ->required();
    spectrum->add_option("s", s_values, "deformation parameters for the numeric spectrum");
    spectrum->add_option("--probes", probes_text,
                         "exact probe points, coordinates ','-separated, points ';'-separated");
    spectrum->fallthrough();

    CLI::App* examples =
        app.add_subcommand("examples", "list built-in documents or print one verbatim");
    examples->add_option("name", examples_name, "'list' or an example name");
    examples->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    cfg.strategy = strategy_text == "exact" ? RankStrategy::exact : RankStrategy::randomized;

    try {
        CommandResult result;
        if (novikov->parsed()) {
            result = cmd_novikov(load_document(doc_ref), cfg);
        } else if (check->parsed()) {
            result = cmd_check(load_document(doc_ref), load_document(doc_ref2), cfg);
        } else if (ss->parsed()) {
            result = cmd_ss(load_document(doc_ref), cfg);
        } else if (spectrum->parsed()) {
            result = cmd_spectrum(load_document(doc_ref), cfg, probes_text, s_values);
        } else {
            result = cmd_examples(examples_name, cfg);
        }
        return emit(cfg, result, out);
    } catch (const truncation_error& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::range_error& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
}

}  // namespace novbott::cli
