#ifndef CANVASLAB_SUITES_HPP
#define CANVASLAB_SUITES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "canvaslab/canvas.hpp"
#include "canvaslab/corpus.hpp"

namespace cvl::suites {

struct Verdict {
    std::string suite;
    bool pass = true;
    long long scanned = 0;      // corpus instances examined
    long long checked = 0;      // instances where the property applied
    long long violations = 0;
    std::string counterexample; // canvas_id of the first violation
    std::string note;
    double wall_seconds = 0;
};

std::vector<std::string> suite_names();
bool suite_known(const std::string& name);

/// Run one named suite over the corpus described by spec. Structure suites
/// append findings JSONL to *findings when given.
Verdict run_suite(const std::string& name, const corpus::CorpusSpec& spec,
                  const canvas::Params& params, std::ostream* findings = nullptr);

std::string to_json(const Verdict& v);

} // namespace cvl::suites

#endif
