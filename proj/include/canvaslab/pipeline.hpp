#ifndef CANVASLAB_PIPELINE_HPP
#define CANVASLAB_PIPELINE_HPP

#include <map>
#include <string>

#include "canvaslab/canvas.hpp"
#include "canvaslab/corpus.hpp"

namespace cvl::pipeline {

struct PipelineOptions {
    int jobs = 1;
    bool resume = false;        // continue from <out>.ckpt if compatible
    long long limit = -1;       // stop after this many records (< 0: all)
    canvas::Params params;
};

struct PipelineSummary {
    long long records = 0;
    long long critical = 0;
    long long chords = 0;
    long long tripods = 0;
    std::map<int, long long> by_order;
};

/// One JSONL metrics record per corpus canvas:
/// {canvas_id, v, e, q, def, s, d, critical, singular} with rationals as
/// "p/q" strings. Writes <out>, <out>.ckpt (resume state) and <out>.csv
/// (summary). Record order is the deterministic corpus order regardless of
/// the worker count.
PipelineSummary run_pipeline(const corpus::CorpusSpec& spec, const std::string& out_path,
                             const PipelineOptions& opt);

/// The JSON record for one canvas (exposed for single-canvas inspection).
std::string metrics_record(const corpus::CanvasInstance& inst, const canvas::Params& p);

} // namespace cvl::pipeline

#endif
