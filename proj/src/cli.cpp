#include "exhauster/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "exhauster/document.hpp"
#include "exhauster/error.hpp"
#include "exhauster/plot.hpp"

namespace exh {

namespace {

void write_arc(std::ostream& os, const std::string& key, const Arc& arc) {
    os << key << ".start: " << format_real(arc.start()) << '\n'
       << key << ".end: " << format_real(arc.start() + arc.length()) << '\n'
       << key << ".length: " << format_real(arc.length()) << '\n';
}

void write_discard(std::ostream& os, const std::string& prefix, const DiscardCertificate& cert) {
    os << prefix << "mode: " << to_string(cert.mode) << '\n'
       << prefix << "worst_gap: " << format_real(cert.worst_gap) << '\n'
       << prefix << "intervals: " << cert.partition.size() << '\n';
    for (std::size_t k = 0; k < cert.partition.size(); ++k) {
        const auto& iv = cert.partition[k];
        const std::string key = prefix + "interval." + std::to_string(k);
        os << key << ".start: " << format_real(iv.arc.start()) << '\n'
           << key << ".end: " << format_real(iv.arc.start() + iv.arc.length()) << '\n'
           << key << ".witness: " << iv.witness_label << '\n';
    }
}

std::size_t checked_index(const Exhauster& ex, long long index) {
    if (index < 0 || static_cast<unsigned long long>(index) >= ex.size()) {
        throw IndexError("body index " + std::to_string(index) + " out of range (exhauster has " +
                         std::to_string(ex.size()) + " bodies)");
    }
    return static_cast<std::size_t>(index);
}

std::filesystem::path default_reduced_path(const std::filesystem::path& in) {
    auto out = in;
    out.replace_extension();
    out += ".reduced.json";
    return out;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << text;
}

}  // namespace

std::string format_certificate(const Exhauster& ex, const DiscardResult& result) {
    std::ostringstream os;
    if (const auto* d = std::get_if<DiscardCertificate>(&result)) {
        os << "body: " << ex[d->body].label() << '\n' << "index: " << d->body << '\n' << "verdict: discardable\n";
        write_discard(os, "", *d);
    } else {
        const auto& r = std::get<RetentionCertificate>(result);
        os << "body: " << ex[r.body].label() << '\n' << "index: " << r.body << '\n' << "verdict: retained\n";
        write_arc(os, "contact", r.contact);
        os << "margin: " << format_real(r.margin) << '\n'
           << "witness_theta: " << format_real(r.witness_theta) << '\n'
           << "witness_gap: " << format_real(r.witness_gap) << '\n';
    }
    return os.str();
}

std::string format_report(const Exhauster& ex, const MinimalityReport& report) {
    std::ostringstream os;
    os << "verdict: " << (report.minimal ? "minimal" : "not-minimal") << '\n'
       << "containment_violations: " << report.containment_violations.size() << '\n';
    for (std::size_t k = 0; k < report.containment_violations.size(); ++k) {
        const auto [inner, outer] = report.containment_violations[k];
        os << "violation." << k << ".inner: " << ex[inner].label() << '\n'
           << "violation." << k << ".outer: " << ex[outer].label() << '\n';
    }
    for (const auto& s : report.bodies) {
        const std::string key = "body." + ex[s.body].label();
        if (s.contact) {
            os << key << ".status: kept\n";
            write_arc(os, key + ".contact", *s.contact);
        } else if (s.discard) {
            os << key << ".status: removable\n";
            write_discard(os, key + ".", *s.discard);
        } else {
            os << key << ".status: no-contact-interval\n";
        }
    }
    return os.str();
}

std::string format_reduction(const Exhauster& original, const ReductionResult& result) {
    std::ostringstream os;
    os << "removed: " << result.log.size() << '\n';
    for (std::size_t k = 0; k < result.log.size(); ++k) {
        const auto& r = result.log[k];
        const std::string key = "removal." + std::to_string(k) + ".";
        os << key << "label: " << r.label << '\n' << key << "original_index: " << r.original_index << '\n';
        write_discard(os, key, r.certificate);
    }
    os << "kept: ";
    for (std::size_t i = 0; i < result.reduced.size(); ++i) os << (i ? "," : "") << result.reduced[i].label();
    os << '\n'
       << "original_size: " << original.size() << '\n'
       << "max_deviation: " << format_real(result.max_deviation) << '\n'
       << "minimal: " << (result.report.minimal ? "true" : "false") << '\n';
    return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reduce upper exhausters of planar positively homogeneous functions", "exhauster"};
    app.require_subcommand(1);
    app.fallthrough();
    double tol = kDefaultTol;
    double delta_min = kDefaultDeltaMin;
    app.add_option("--tol", tol, "absolute tolerance on rho values")->check(CLI::NonNegativeNumber);
    app.add_option("--delta-min", delta_min, "shortest accepted contact arc (radians)")->check(CLI::PositiveNumber);

    std::string file;
    auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "exhauster document")->required(); };

    auto* eval = app.add_subcommand("eval", "print h(g)");
    add_file(eval);
    std::vector<double> dir;
    eval->add_option("--dir", dir, "direction vector X Y")->expected(2)->required();

    auto* curves = app.add_subcommand("curves", "tabulate theta-rho curves and the lower envelope");
    add_file(curves);
    std::size_t samples = 720;
    std::string format = "csv";
    std::string curves_out;
    curves->add_option("--samples", samples, "number of samples")->check(CLI::Range(2, 10000000));
    curves->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    curves->add_option("--out", curves_out, "output path (stdout if omitted)");

    auto* discard = app.add_subcommand("discard", "test whether one body can be discarded");
    add_file(discard);
    long long index = 0;
    discard->add_option("--index", index, "body index")->required();

    auto* red = app.add_subcommand("reduce", "greedily discard redundant bodies");
    add_file(red);
    std::string reduce_out;
    red->add_option("--out", reduce_out, "output document (default FILE stem + .reduced.json, '-' for stdout)");

    auto* minimal = app.add_subcommand("minimal", "check inclusion-minimality");
    add_file(minimal);

    auto* inter = app.add_subcommand("intersect", "intersect two polygon bodies");
    add_file(inter);
    std::vector<long long> pair;
    inter->add_option("--indices", pair, "two body indices I J")->expected(2)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const Exhauster ex = load_exhauster(file);
        if (*eval) {
            out << format_real(evaluate_h(ex, Point2(dir[0], dir[1]))) << '\n';
            return 0;
        }
        if (*curves) {
            const auto fmt = format == "svg" ? PlotFormat::svg : PlotFormat::csv;
            write_text(curves_out, emit_curves(ex, samples, fmt), out);
            return 0;
        }
        if (*discard) {
            const std::size_t i = checked_index(ex, index);
            const auto result = is_discardable(ex, i, tol);
            out << format_certificate(ex, result);
            return std::holds_alternative<DiscardCertificate>(result) ? 0 : 1;
        }
        if (*red) {
            const auto result = reduce(ex, tol, delta_min);
            const std::string path = reduce_out.empty() ? default_reduced_path(file).string() : reduce_out;
            const std::string doc = serialize_exhauster(result.reduced);
            if (path == "-") {
                out << format_reduction(ex, result) << doc;
            } else {
                write_text(path, doc, out);
                out << format_reduction(ex, result) << "output: " << path << '\n';
            }
            return 0;
        }
        if (*minimal) {
            const auto report = check_minimal(ex, tol, delta_min);
            out << format_report(ex, report);
            return report.minimal ? 0 : 1;
        }
        if (*inter) {
            const auto a = checked_index(ex, pair[0]);
            const auto b = checked_index(ex, pair[1]);
            const auto result = intersect_polygons(ex[a], ex[b]);
            if (!result) {
                out << "empty\n";
            } else {
                out << "vertices:";
                for (const auto& v : result->vertices()) out << " (" << format_real(v.x) << ", " << format_real(v.y) << ')';
                out << '\n';
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace exh
