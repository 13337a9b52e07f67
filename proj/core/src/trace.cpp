#include "hampat/trace.hpp"

#include <algorithm>
#include <sstream>

#include "hampat/errors.hpp"
#include "json.hpp"

namespace hampat {

using ojson = nlohmann::ordered_json;

void StageRecord::set(const std::string& key, double value) {
    for (auto& [k, v] : stats)
        if (k == key) {
            v = value;
            return;
        }
    stats.emplace_back(key, value);
}

std::optional<double> StageRecord::get(std::string_view key) const {
    for (const auto& [k, v] : stats)
        if (k == key) return v;
    return std::nullopt;
}

StageRecord& Trace::stage(std::string_view name) {
    for (auto& s : stages)
        if (s.name == name) return s;
    stages.push_back(StageRecord{std::string(name), 0, false, {}, {}});
    return stages.back();
}

const StageRecord* Trace::find(std::string_view name) const {
    for (const auto& s : stages)
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

std::size_t colours_used(const Trace& t) {
    std::size_t total = 0;
    for (const auto& seg : t.colour_segments) total += seg.count;
    return total;
}

}  // namespace

std::string trace_to_json(const Trace& trace) {
    ojson j;
    j["n"] = trace.n;
    ojson stages = ojson::array();
    for (const auto& s : trace.stages) {
        ojson st;
        st["name"] = s.name;
        st["attempts"] = s.attempts;
        st["ok"] = s.ok;
        ojson stats = ojson::object();
        for (const auto& [k, v] : s.stats) stats[k] = v;
        st["stats"] = std::move(stats);
        if (!s.detail.empty()) st["detail"] = s.detail;
        stages.push_back(std::move(st));
    }
    j["stages"] = std::move(stages);
    j["colours_used"] = colours_used(trace);
    ojson segs = ojson::array();
    for (const auto& seg : trace.colour_segments) segs.push_back({{"what", seg.what}, {"first", seg.first}, {"count", seg.count}});
    j["colour_segments"] = std::move(segs);
    if (trace.cycle) j["cycle"] = {{"vertices", trace.cycle->vertices}, {"colours", trace.cycle->colours}};
    return j.dump() + "\n";
}

Trace trace_from_json(std::string_view text) {
    Trace t;
    try {
        const ojson j = ojson::parse(text.begin(), text.end());
        t.n = j.at("n").get<std::size_t>();
        for (const auto& st : j.at("stages")) {
            StageRecord s;
            s.name = st.at("name").get<std::string>();
            s.attempts = st.at("attempts").get<int>();
            s.ok = st.at("ok").get<bool>();
            for (const auto& [k, v] : st.at("stats").items()) s.stats.emplace_back(k, v.get<double>());
            if (st.contains("detail")) s.detail = st["detail"].get<std::string>();
            t.stages.push_back(std::move(s));
        }
        if (j.contains("colour_segments"))
            for (const auto& seg : j["colour_segments"])
                t.colour_segments.push_back(
                    {seg.at("what").get<std::string>(), seg.at("first").get<std::size_t>(), seg.at("count").get<std::size_t>()});
        if (j.contains("cycle")) {
            ColouredWalk w;
            w.vertices = j["cycle"].at("vertices").get<std::vector<Vertex>>();
            w.colours = j["cycle"].at("colours").get<std::vector<Colour>>();
            w.closed = true;
            t.cycle = std::move(w);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, "trace", e.what());
    }
    return t;
}

AuditReport audit_run(const Trace& trace) {
    AuditReport r;
    r.solved = trace.cycle.has_value();

    if (!trace.colour_segments.empty()) {
        std::vector<int> uses(trace.n, 0);
        bool in_range = true;
        for (const auto& seg : trace.colour_segments)
            for (std::size_t c = seg.first; c < seg.first + seg.count; ++c) {
                if (c >= trace.n) {
                    in_range = false;
                    continue;
                }
                ++uses[c];
            }
        const auto missing = static_cast<std::size_t>(std::count(uses.begin(), uses.end(), 0));
        const auto repeated = static_cast<std::size_t>(std::count_if(uses.begin(), uses.end(), [](int u) { return u > 1; }));
        r.colours_tiled = in_range && missing == 0 && repeated == 0;
        if (r.colours_tiled)
            r.findings.push_back("all " + std::to_string(trace.n) + " colours consumed exactly once");
        else
            r.findings.push_back("colour tiling broken: " + std::to_string(missing) + " unused, " +
                                 std::to_string(repeated) + " reused" + (in_range ? "" : ", segment beyond n"));
    }

    for (const auto& s : trace.stages) {
        if (!s.ok)
            r.findings.push_back("stage " + s.name + " failed after " + std::to_string(s.attempts) + " attempt(s)" +
                                 (s.detail.empty() ? "" : ": " + s.detail));
    }
    if (const auto* c = trace.find("connect")) {
        const auto covered = c->get("z_covered");
        const auto size = c->get("z_size");
        if (covered && size) {
            std::ostringstream line;
            line << "reservoir covered by connections: " << *covered << " of " << *size
                 << (*covered < *size / 2 ? " (below half)" : " (half or more)");
            r.findings.push_back(line.str());
        }
    }
    r.findings.push_back(r.solved ? "cycle present" : "no cycle");

    std::ostringstream text;
    for (const auto& f : r.findings) text << f << '\n';
    r.text = text.str();
    ojson j;
    j["solved"] = r.solved;
    j["colours_tiled"] = r.colours_tiled;
    j["colours_used"] = colours_used(trace);
    j["findings"] = r.findings;
    r.json = j.dump() + "\n";
    return r;
}

}  // namespace hampat
