/*
 * scs — greedy shortest common superstring via a compact text index.
 *
 * Subcommands:
 *   superstring  read strings, preprocess, index, merge greedily, emit the
 *                superstring (plus optional plan TSV / stats JSON / index)
 *   verify       check that every input string occurs in a superstring file
 *
 * Exit codes: 0 success, 1 input/parse failure (or failed verify),
 * 2 internal verification failure.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "scs/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw scs::parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

scs::input_format resolve_format(const std::string& fmt, std::string_view bytes) {
    if (fmt == "fasta") return scs::input_format::fasta;
    if (fmt == "lines") return scs::input_format::lines;
    // auto: FASTA iff the first non-whitespace byte is '>'
    for (char ch : bytes) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '>' ? scs::input_format::fasta : scs::input_format::lines;
    }
    return scs::input_format::lines;
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw scs::parse_error("cannot write '" + path + "'");
    out << data;
}

void write_plan_tsv(const std::string& path, const scs::pipeline_result& r) {
    std::ostringstream out;
    out << "left_original_id\tright_original_id\toverlap_length\n";
    // rows in path order, ids are 1-based original input indices
    int64_t cur = r.plan.head;
    while (cur != 0 && r.plan.successor[cur] != 0) {
        const int64_t next = r.plan.successor[cur];
        out << (r.set.kept_origin[cur - 1] + 1) << '\t'
            << (r.set.kept_origin[next - 1] + 1) << '\t'
            << r.plan.overlap_length[cur] << '\n';
        cur = next;
    }
    write_output(path, out.str());
}

void write_stats_json(const std::string& path, const scs::run_stats& s) {
    nlohmann::json j{
        {"stats_version", 1},
        {"m_original", s.m_original},
        {"m_kept", s.m_kept},
        {"n_chars", s.n_chars},
        {"sigma", s.sigma},
        {"concat_length", s.concat_length},
        {"superstring_length", s.superstring_length},
        {"total_overlap", s.total_overlap},
        {"merges", s.merges},
        {"phase_seconds",
         {{"parse", s.parse_seconds},
          {"preprocess", s.preprocess_seconds},
          {"index_build", s.index_build_seconds},
          {"superstring", s.superstring_seconds},
          {"verify", s.verify_seconds},
          {"total", s.total_seconds}}},
        {"memory_bits",
         {{"bwt", s.bwt_bits},
          {"c_array", s.c_array_bits},
          {"topology", s.topology_bits},
          {"iterators", s.iterator_bits},
          {"merge_state", s.merge_state_bits},
          {"total", s.total_bits()}}},
    };
    write_output(path, j.dump(2) + "\n");
}

int cmd_superstring(const std::string& input_path, const std::string& format,
                    const std::string& output_path, const std::string& output_format,
                    const std::string& plan_path, const std::string& stats_path,
                    const std::string& index_path, bool oracle, bool trace) {
    const std::string bytes = read_file(input_path);

    scs::pipeline_options opt;
    opt.run_oracle = oracle;
    if (trace) {
        opt.trace = [](const scs::merge_attempt& a) {
            std::cerr << a.i << '\t' << a.d << '\t' << a.candidates.lo << '\t'
                      << a.candidates.hi << '\t';
            switch (a.result) {
                case scs::merge_attempt::outcome::accept:
                    std::cerr << "accept=" << a.j;
                    break;
                case scs::merge_attempt::outcome::cycle_none:
                    std::cerr << "cycle";
                    break;
                case scs::merge_attempt::outcome::none:
                    std::cerr << "none";
                    break;
            }
            std::cerr << '\n';
        };
    }

    const scs::pipeline_result r =
        scs::run_pipeline(bytes, resolve_format(format, bytes), opt);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';

    if (output_format == "fasta")
        write_output(output_path, ">superstring\n" + r.superstring + "\n");
    else
        write_output(output_path, r.superstring + "\n");

    if (!plan_path.empty()) write_plan_tsv(plan_path, r);
    if (!stats_path.empty()) write_stats_json(stats_path, r.stats);
    if (!index_path.empty()) {
        std::ofstream out(index_path, std::ios::binary);
        if (!out) throw scs::parse_error("cannot write '" + index_path + "'");
        r.index.save(out);
    }

    if (!r.verification.pass) {
        std::cerr << "internal verification failed: " << r.verification.missing.size()
                  << " input string(s) missing from the output (this is a bug)\n";
        return 2;
    }
    if (r.oracle) {
        if (!r.oracle->match) {
            std::cerr << "oracle mismatch: " << r.oracle->detail << '\n';
            return 2;
        }
        std::cerr << "oracle: plans and superstrings identical\n";
    }
    return 0;
}

int cmd_verify(const std::string& input_path, const std::string& format,
               const std::string& superstring_path) {
    const std::string bytes = read_file(input_path);
    const auto parsed = scs::parse_input(bytes, resolve_format(format, bytes));

    std::string superstring = read_file(superstring_path);
    if (!superstring.empty() && superstring.front() == '>') {
        const auto rec = scs::parse_input(superstring, scs::input_format::fasta);
        superstring.clear();
        for (const auto& s : rec.strings) superstring += s;
    } else if (!superstring.empty() && superstring.back() == '\n') {
        superstring.pop_back();
    }

    const auto report = scs::verify_superstring(parsed.strings, superstring);
    if (report.pass) {
        std::cerr << "verify: all " << parsed.strings.size() << " strings occur\n";
        return 0;
    }
    std::cerr << "verify: " << report.missing.size() << " string(s) missing:\n";
    for (size_t k = 0; k < report.missing.size() && k < 10; ++k)
        std::cerr << "  [" << report.missing[k] + 1 << "] "
                  << parsed.strings[report.missing[k]] << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy shortest common superstring over a compact index"};
    app.require_subcommand(1);

    std::string input_path, output_path, plan_path, stats_path, index_path;
    std::string format = "auto", output_format = "raw";
    bool oracle = false, trace = false;

    CLI::App* sup = app.add_subcommand("superstring", "compute the greedy superstring");
    sup->add_option("input", input_path, "input file ('-' for stdin)")->required();
    sup->add_option("-f,--format", format, "input format: auto|fasta|lines")
        ->check(CLI::IsMember({"auto", "fasta", "lines"}));
    sup->add_option("-o,--output", output_path, "output file (default stdout)");
    sup->add_option("--output-format", output_format, "output format: raw|fasta")
        ->check(CLI::IsMember({"raw", "fasta"}));
    sup->add_option("--plan", plan_path, "write the merge plan as TSV");
    sup->add_option("--stats", stats_path, "write run statistics as JSON");
    sup->add_option("--keep-index", index_path, "serialize the index (SCSIDX1)");
    sup->add_flag("--oracle", oracle, "also run the quadratic greedy and compare");
    sup->add_flag("--trace", trace, "log every merge attempt to stderr (TSV)");

    std::string verify_input, verify_superstring_path;
    CLI::App* ver = app.add_subcommand("verify", "check a superstring against inputs");
    ver->add_option("input", verify_input, "original input file")->required();
    ver->add_option("superstring", verify_superstring_path, "superstring file")
        ->required();
    ver->add_option("-f,--format", format, "input format: auto|fasta|lines")
        ->check(CLI::IsMember({"auto", "fasta", "lines"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (sup->parsed())
            return cmd_superstring(input_path, format, output_path, output_format,
                                   plan_path, stats_path, index_path, oracle, trace);
        return cmd_verify(verify_input, format, verify_superstring_path);
    } catch (const scs::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
