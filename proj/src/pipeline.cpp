#include "canvaslab/pipeline.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

namespace cvl::pipeline {

namespace {

std::string rat_str(const canvas::Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string spec_digest(const corpus::CorpusSpec& spec, const canvas::Params& p) {
    std::string blob = spec.to_config() + "epsilon=" + rat_str(p.epsilon) +
                       "\nalpha=" + rat_str(p.alpha) + "\n";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)corpus::fnv1a64(blob));
    return buf;
}

/// Number of complete lines in the file; truncates a trailing partial line.
long long complete_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return 0;
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto last_nl = data.find_last_of('\n');
    std::size_t keep = last_nl == std::string::npos ? 0 : last_nl + 1;
    if (keep != data.size()) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out.write(data.data(), (std::streamsize)keep);
    }
    long long lines = 0;
    for (std::size_t i = 0; i < keep; ++i)
        if (data[i] == '\n') ++lines;
    return lines;
}

} // namespace

std::string metrics_record(const corpus::CanvasInstance& inst, const canvas::Params& p) {
    auto m = canvas::metrics(inst.t, p);
    bool crit = canvas::is_critical(inst.t);
    auto sing = canvas::classify_singular(inst.t);
    nlohmann::ordered_json j;
    j["canvas_id"] = inst.id;
    j["v"] = m.v;
    j["e"] = m.e;
    j["q"] = m.q;
    j["def"] = rat_str(m.def);
    j["s"] = rat_str(m.s);
    j["d"] = rat_str(m.d);
    j["critical"] = crit;
    j["singular"] = sing == canvas::Singularity::chord    ? "chord"
                    : sing == canvas::Singularity::tripod ? "tripod"
                                                          : "none";
    return j.dump();
}

PipelineSummary run_pipeline(const corpus::CorpusSpec& spec, const std::string& out_path,
                             const PipelineOptions& opt) {
    const std::string ckpt_path = out_path + ".ckpt";
    const std::string digest = spec_digest(spec, opt.params);

    long long skip = 0;
    if (opt.resume) {
        std::ifstream ck(ckpt_path);
        std::string stored;
        if (ck && std::getline(ck, stored)) {
            if (stored != digest)
                throw std::runtime_error("checkpoint does not match the requested spec");
            skip = complete_lines(out_path);
        }
    }
    {
        std::ofstream ck(ckpt_path, std::ios::trunc);
        ck << digest << "\n";
    }
    std::ofstream out(out_path,
                      skip > 0 ? (std::ios::binary | std::ios::app)
                               : (std::ios::binary | std::ios::trunc));
    if (!out) throw std::runtime_error("cannot open " + out_path);

    PipelineSummary sum;
    sum.records = skip;

    const int jobs = std::max(1, opt.jobs);
    const std::size_t chunk = 64;
    std::vector<corpus::CanvasInstance> batch;
    long long index = 0;

    auto flush_batch = [&]() {
        if (batch.empty()) return;
        std::vector<std::string> recs(batch.size());
        if (jobs == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                recs[i] = metrics_record(batch[i], opt.params);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&]() {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= batch.size()) return;
                        recs[i] = metrics_record(batch[i], opt.params);
                    }
                });
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            out << recs[i] << "\n";
            out.flush();
            ++sum.records;
            auto j = nlohmann::json::parse(recs[i]);
            if (j["critical"].get<bool>()) ++sum.critical;
            if (j["singular"] == "chord") ++sum.chords;
            if (j["singular"] == "tripod") ++sum.tripods;
            sum.by_order[batch[i].t.g.order()]++;
        }
        batch.clear();
    };

    corpus::generate(spec, [&](corpus::CanvasInstance& inst) {
        if (opt.limit >= 0 && sum.records + (long long)batch.size() >= opt.limit) return false;
        if (index++ < skip) return true;
        batch.push_back(std::move(inst));
        if (batch.size() >= chunk) flush_batch();
        return true;
    });
    flush_batch();
    out.close();

    std::ofstream csv(out_path + ".csv", std::ios::trunc);
    csv << "key,value\n";
    csv << "records," << sum.records << "\n";
    csv << "critical," << sum.critical << "\n";
    csv << "chords," << sum.chords << "\n";
    csv << "tripods," << sum.tripods << "\n";
    for (const auto& [n, c] : sum.by_order) csv << "order_" << n << "," << c << "\n";
    return sum;
}

} // namespace cvl::pipeline
