/*
 * pipeline.hpp
 *
 * End-to-end runs: parse, preprocess, index, iterate, assemble, verify.
 * Runs in two passes: the first removes duplicates and contained strings
 * (building a throwaway first-pass suffix array), the second builds the
 * main index over the filtered set and constructs the superstring.
 */

#ifndef SCS_PIPELINE_HPP
#define SCS_PIPELINE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scs/assembler.hpp"
#include "scs/fm_index.hpp"
#include "scs/overlap_engine.hpp"
#include "scs/text_model.hpp"

namespace scs {

struct pipeline_options {
    bool run_oracle = false;  // also run the quadratic greedy and diff plans
    trace_fn trace;           // per merge-attempt callback, may be empty
};

struct oracle_comparison {
    bool match = true;
    std::string detail;  // first difference, for diagnostics
};

struct pipeline_result {
    alphabet alpha;
    std::vector<std::string> originals;
    std::vector<std::string> warnings;
    string_set set;
    fm_index index;
    merge_plan plan;
    std::vector<merge_edge> edges;  // recorded acceptance order
    std::vector<code_t> superstring_codes;
    std::string superstring;
    verify_report verification;
    run_stats stats;
    std::optional<oracle_comparison> oracle;
};

pipeline_result run_pipeline(std::string_view input_bytes, input_format format,
                             const pipeline_options& options = {});

// Same pipeline, starting from already parsed symbol strings.
pipeline_result run_pipeline_on_strings(std::vector<std::string> strings,
                                        const pipeline_options& options = {});

} // namespace scs

#endif
