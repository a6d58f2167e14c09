#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prodcol/errors.hpp"
#include "prodcol/product.hpp"
#include "prodcol/verify.hpp"

namespace {

using namespace prodcol;

// Phase timings go to stderr so stdout stays byte-stable across runs.
class Stopwatch {
public:
    Stopwatch() : last_(std::chrono::steady_clock::now()) {}

    void lap(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        std::cerr << "time_" << name << "_ms=" << std::fixed
                  << std::setprecision(3) << ms << '\n';
    }

private:
    std::chrono::steady_clock::time_point last_;
};

struct Report {
    struct Row {
        std::string key, machine, human;
    };
    std::vector<Row> rows;

    void add(const std::string& key, const std::string& value) {
        rows.push_back({key, value, value});
    }
    void add(const std::string& key, std::uint64_t value) {
        add(key, std::to_string(value));
    }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add_bool(const std::string& key, bool value) {
        rows.push_back({key, value ? "1" : "0", value ? "yes" : "no"});
    }

    void print(std::ostream& out, bool machine) const {
        for (const auto& row : rows) {
            if (machine) {
                out << row.key << '=' << row.machine << '\n';
            } else {
                std::string label = row.key;
                for (char& c : label)
                    if (c == '_')
                        c = ' ';
                out << std::left << std::setw(18) << (label + ":") << row.human
                    << '\n';
            }
        }
    }
};

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> instance_deltas(const ProductInstance& inst) {
    std::vector<int> deltas;
    deltas.reserve(inst.trees.size());
    for (const Tree& t : inst.trees)
        deltas.push_back(max_degree(t));
    return deltas;
}

void add_instance_rows(Report& report, const ProductInstance& inst,
                       const Bounds& b) {
    report.add("d", inst.d());
    report.add("dims", join_ints(inst.dims));
    report.add("delta", join_ints(instance_deltas(inst)));
    report.add("vertices", inst.total);
    report.add("lower", b.lower);
    report.add("upper", b.upper);
    if (b.prior_upper)
        report.add("prior_upper", *b.prior_upper);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidParams("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw InvalidParams("cannot open '" + path + "' for writing");
    return out;
}

void write_colouring(std::ostream& out, const ProductColouring& pc) {
    const auto& dims = pc.instance.dims;
    std::vector<int> coords(dims.size(), 0);
    std::string line;
    for (std::uint64_t f = 0; f < pc.instance.total; ++f) {
        line.clear();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i)
                line += ',';
            line += std::to_string(coords[i]);
        }
        line += '\t';
        line += std::to_string(pc.colour_at(f));
        line += '\n';
        out << line;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] + 1 < dims[i]) {
                ++coords[i];
                break;
            }
            coords[i] = 0;
        }
    }
}

std::int64_t parse_int64(const std::string& text, int lineno) {
    try {
        std::size_t pos = 0;
        std::int64_t value = std::stoll(text, &pos);
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
        if (pos != text.size())
            throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad integer '" +
                         text + "'");
    }
}

// Reads a colouring file back into flat order. Lines are
// "c1,c2,...,cd<TAB>colour"; '#' comments and blank lines are allowed.
std::vector<std::int64_t> parse_colouring(std::istream& in,
                                          const ProductInstance& inst) {
    if (inst.total > kDefaultMaterializeCap)
        throw TooLarge("colouring for " + std::to_string(inst.total) +
                       " vertices exceeds the load cap of " +
                       std::to_string(kDefaultMaterializeCap));
    std::vector<std::int64_t> colours(inst.total, 0);
    std::vector<char> seen(inst.total, 0);
    std::uint64_t count = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) +
                             ": missing tab separator");
        std::vector<int> coords;
        std::string head = line.substr(0, tab);
        std::size_t start = 0;
        while (true) {
            std::size_t comma = head.find(',', start);
            std::string piece = head.substr(
                start, comma == std::string::npos ? std::string::npos
                                                  : comma - start);
            std::int64_t c = parse_int64(piece, lineno);
            coords.push_back(static_cast<int>(c));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (coords.size() != inst.dims.size())
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(inst.dims.size()) +
                             " coordinates, got " +
                             std::to_string(coords.size()));
        std::uint64_t flat;
        try {
            flat = mixed_radix_encode(coords, inst.dims);
        } catch (const OutOfRange& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (seen[flat])
            throw ParseError("line " + std::to_string(lineno) +
                             ": vertex listed twice");
        seen[flat] = 1;
        colours[flat] = parse_int64(line.substr(tab + 1), lineno);
        ++count;
    }
    if (count < inst.total)
        throw MissingColour("colouring covers " + std::to_string(count) +
                            " of " + std::to_string(inst.total) + " vertices");
    return colours;
}

struct CommonOpts {
    bool machine = false;
};

int cmd_colour(const std::string& instance_path, const std::string& output_path,
               bool do_wrap, const CommonOpts& common) {
    Stopwatch sw;
    std::ifstream in = open_input(instance_path);
    ProductInstance inst = parse_instance(in);
    sw.lap("parse");

    ProductColouring pc = colour_product(inst);
    sw.lap("colour");
    if (do_wrap) {
        pc = wrap(pc);
        sw.lap("wrap");
    }
    std::uint64_t used = pc.distinct_colours();
    sw.lap("count");

    std::ofstream out = open_output(output_path);
    write_colouring(out, pc);
    out.flush();
    if (!out)
        throw InvalidParams("write to '" + output_path + "' failed");
    sw.lap("write");

    Bounds b = bounds(inst);
    if (pc.wrapped && used > static_cast<std::uint64_t>(b.upper))
        throw InternalError("wrapped colouring uses " + std::to_string(used) +
                            " colours, above the guaranteed " +
                            std::to_string(b.upper));

    Report report;
    report.add("command", "colour");
    add_instance_rows(report, inst, b);
    report.add_bool("wrapped", pc.wrapped);
    report.add("colours_used", used);
    report.add("output", output_path);
    report.print(std::cout, common.machine);
    return 0;
}

int cmd_verify(const std::string& instance_path,
               const std::string& colouring_path, bool force_unwrapped,
               std::size_t cap_vertices, const CommonOpts& common) {
    Stopwatch sw;
    std::ifstream in = open_input(instance_path);
    ProductInstance inst = parse_instance(in);
    sw.lap("parse");
    std::ifstream cin_ = open_input(colouring_path);
    std::vector<std::int64_t> colours = parse_colouring(cin_, inst);
    sw.lap("load");

    Bounds b = bounds(inst);
    const std::int64_t wrap_max = b.upper - 1;  // 2S
    bool oversized = inst.total > cap_vertices;
    bool failed = false;

    Report report;
    report.add("command", "verify");
    add_instance_rows(report, inst, b);

    if (oversized) {
        report.add("proper_on_square", "skipped:too_large");
    } else {
        ExplicitGraph g = build_product_graph(inst, cap_vertices);
        sw.lap("graph");
        ExplicitGraph sq = square(g, cap_vertices);
        sw.lap("square");
        ProperReport pr = check_proper(sq, colours);
        sw.lap("proper");
        report.add("proper_on_square", pr.ok ? "pass" : "fail");
        if (!pr.ok) {
            failed = true;
            report.add("proper_violation",
                       std::to_string(pr.u) + "," + std::to_string(pr.v));
        }
    }

    bool treat_unwrapped = force_unwrapped;
    if (!treat_unwrapped)
        for (std::int64_t c : colours)
            if (c < 0 || c > wrap_max) {
                treat_unwrapped = true;
                break;
            }
    if (treat_unwrapped) {
        SpanReport sr = check_spans(inst, colours);
        sw.lap("spans");
        report.add("spans_in_windows", sr.ok ? "pass" : "fail");
        if (!sr.ok) {
            failed = true;
            report.add("span_violation",
                       std::to_string(sr.u) + "," + std::to_string(sr.v) +
                           ",dim=" + std::to_string(sr.dimension) + ",span=" +
                           std::to_string(sr.span) + ",window=[" +
                           std::to_string(sr.lo) + "," + std::to_string(sr.hi) +
                           "]");
        }
    } else {
        report.add("spans_in_windows", "skipped:wrapped_colouring");
    }

    if (oversized) {
        report.add("clique", "skipped:too_large");
    } else {
        CliqueCertificate cert = clique_certificate(inst);
        bool ok = verify_clique(inst, cert, cap_vertices);
        sw.lap("clique");
        report.add("clique", ok ? "pass" : "fail");
        report.add("clique_size", cert.size);
        if (!ok)
            failed = true;
    }

    report.add_bool("warning", oversized);
    report.print(std::cout, common.machine);
    return failed ? 1 : 0;
}

int cmd_bounds(const std::string& instance_path, bool exact,
               std::size_t cap_vertices, std::size_t cap_exact,
               const CommonOpts& common) {
    Stopwatch sw;
    std::ifstream in = open_input(instance_path);
    ProductInstance inst = parse_instance(in);
    sw.lap("parse");

    Bounds b = bounds(inst);
    Report report;
    report.add("command", "bounds");
    add_instance_rows(report, inst, b);

    if (exact) {
        ExplicitGraph g = build_product_graph(inst, cap_vertices);
        ExplicitGraph sq = square(g, cap_vertices);
        sw.lap("square");
        CliqueCertificate cert = clique_certificate(inst);
        int chi = chi_exact(sq, cap_exact, cert.size);
        sw.lap("exact");
        if (chi < b.lower || chi > b.upper)
            throw InternalError("exact chromatic number " + std::to_string(chi) +
                                " escapes [" + std::to_string(b.lower) + ", " +
                                std::to_string(b.upper) + "]");
        report.add("chi_exact", chi);
    }
    report.print(std::cout, common.machine);
    return 0;
}

int cmd_generate(const std::string& kind, int n, int spine, int legs,
                 std::optional<std::uint64_t> seed, const std::string& output_path,
                 const CommonOpts& common) {
    Stopwatch sw;
    GenerateParams params;
    if (kind == "path") {
        params.kind = TreeKind::Path;
        params.n = n;
    } else if (kind == "star") {
        params.kind = TreeKind::Star;
        params.n = n;
    } else if (kind == "caterpillar") {
        params.kind = TreeKind::Caterpillar;
        params.spine = spine;
        params.legs = legs;
    } else if (kind == "random") {
        params.kind = TreeKind::Random;
        params.n = n;
        if (!seed)
            throw InvalidParams("random trees need --seed");
        params.seed = *seed;
    } else {
        throw InvalidParams("unknown kind '" + kind + "'");
    }

    Tree t = generate(params);
    std::ofstream out = open_output(output_path);
    write_tree(out, t);
    out.flush();
    if (!out)
        throw InvalidParams("write to '" + output_path + "' failed");
    sw.lap("generate");

    Report report;
    report.add("command", "generate");
    report.add("kind", kind);
    report.add("vertices", t.n);
    report.add("delta", max_degree(t));
    if (seed)
        report.add("seed", *seed);
    report.add("output", output_path);
    report.print(std::cout, common.machine);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded proper colourings of squares of tree products"};
    app.require_subcommand(1);

    int exit_code = 0;
    CommonOpts common;

    auto* colour = app.add_subcommand(
        "colour", "Colour the square of a product of trees");
    std::string colour_instance, colour_output;
    bool do_wrap = true;
    colour->add_option("instance", colour_instance, "Instance file")->required();
    colour->add_option("-o,--output", colour_output, "Colouring output path")
        ->required();
    colour->add_flag("--wrap,!--no-wrap", do_wrap,
                     "Fold colours into [0, 2S] (default on)");
    colour->add_flag("--machine", common.machine, "Stable key=value output");
    colour->callback([&] {
        exit_code = cmd_colour(colour_instance, colour_output, do_wrap, common);
    });

    auto* verify = app.add_subcommand(
        "verify", "Check a colouring file against the instance");
    std::string verify_instance, verify_colouring;
    bool force_unwrapped = false;
    std::size_t verify_cap = kDefaultGraphCap;
    verify->add_option("instance", verify_instance, "Instance file")->required();
    verify->add_option("colouring", verify_colouring, "Colouring file")
        ->required();
    verify->add_flag("--unwrapped", force_unwrapped,
                     "Force the window span check");
    verify->add_option("--cap-vertices", verify_cap,
                       "Explicit graph size limit");
    verify->add_flag("--machine", common.machine, "Stable key=value output");
    verify->callback([&] {
        exit_code = cmd_verify(verify_instance, verify_colouring,
                               force_unwrapped, verify_cap, common);
    });

    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Report colour bounds for an instance");
    std::string bounds_instance;
    bool exact = false;
    std::size_t bounds_cap = kDefaultGraphCap;
    std::size_t exact_cap = kDefaultChiLimit;
    bounds_cmd->add_option("instance", bounds_instance, "Instance file")
        ->required();
    bounds_cmd->add_flag("--exact", exact, "Also compute the exact chromatic number");
    bounds_cmd->add_option("--cap-vertices", bounds_cap,
                           "Explicit graph size limit");
    bounds_cmd->add_option("--cap-exact", exact_cap,
                           "Vertex limit for the exact search");
    bounds_cmd->add_flag("--machine", common.machine, "Stable key=value output");
    bounds_cmd->callback([&] {
        exit_code = cmd_bounds(bounds_instance, exact, bounds_cap, exact_cap,
                               common);
    });

    auto* gen = app.add_subcommand("generate", "Write a tree from a family");
    std::string gen_kind, gen_output;
    int gen_n = 0, gen_spine = 0, gen_legs = 0;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--kind", gen_kind, "path, star, caterpillar or random")
        ->required();
    gen->add_option("-n", gen_n, "Vertex count (path, star, random)");
    gen->add_option("--spine", gen_spine, "Caterpillar spine length");
    gen->add_option("--legs", gen_legs, "Caterpillar legs per spine vertex");
    gen->add_option("--seed", gen_seed, "Random tree seed");
    gen->add_option("-o,--output", gen_output, "Tree output path")->required();
    gen->add_flag("--machine", common.machine, "Stable key=value output");
    gen->callback([&] {
        exit_code = cmd_generate(gen_kind, gen_n, gen_spine, gen_legs, gen_seed,
                                 gen_output, common);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const prodcol::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return prodcol::is_defect(e) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}
