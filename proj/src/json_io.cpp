#include "ic/json_io.hpp"

#include <string>

#include "ic/errors.hpp"

namespace ic {

namespace {

Json vec(const std::vector<int>& v) { return Json(v); }

}  // namespace

Json to_json(const CycleCensus& c) {
    Json j;
    j["n"] = c.n;
    Json by = Json::object();
    for (int len = 3; len <= c.n; ++len) by[std::to_string(len)] = to_string(c.at(len));
    j["by_length"] = by;
    j["f"] = to_string(c.total());
    j["f_odd"] = to_string(c.odd());
    j["f_even"] = to_string(c.even());
    j["holes"] = to_string(c.holes());
    j["odd_holes"] = to_string(c.odd_holes());
    return j;
}

Json to_json(const PathCensus& c, int x, int y) {
    Json j;
    j["n"] = c.n;
    j["x"] = x;
    j["y"] = y;
    Json by = Json::object();
    for (int len = 1; len < static_cast<int>(c.by_length.size()); ++len) by[std::to_string(len)] = to_string(c.at(len));
    j["by_length"] = by;
    j["p2"] = to_string(c.p2());
    j["p2_odd"] = to_string(c.p2_odd());
    j["p2_even"] = to_string(c.p2_even());
    return j;
}

Json to_json(const TreeStats& t) {
    Json j;
    j["leaf_count"] = to_string(t.leaf_count);
    j["y_leaf_count"] = to_string(t.y_leaf_count);
    Json profiles = Json::array();
    for (const auto& p : t.child_count_profiles) profiles.push_back(vec(p));
    j["child_count_profiles"] = profiles;
    j["balanced"] = t.balanced;
    return j;
}

Json to_json(const ClusterPartition& p) {
    Json j;
    j["clusters"] = p.clusters;
    j["cyclic"] = p.cyclic;
    return j;
}

Json to_json(const FamilyId& id) {
    Json j;
    j["tag"] = to_string(id.tag);
    j["n"] = id.n;
    j["variant"] = id.variant;
    return j;
}

Json to_json(const RecognitionReport& r) {
    Json j;
    j["verified"] = r.verified;
    j["family"] = r.family ? to_json(*r.family) : Json(nullptr);
    Json tags = Json::array();
    for (FamilyTag t : r.matching) tags.push_back(to_string(t));
    j["matching"] = tags;
    j["cluster_sizes"] = vec(r.cluster_sizes);
    Json intra = Json::array();
    for (IntraKind k : r.intra) intra.push_back(to_string(k));
    j["intra_pattern"] = intra;
    if (r.witness) {
        Json w;
        w["vertex"] = r.witness->vertex;
        w["cluster"] = r.witness->cluster;
        w["condition"] = r.witness->condition == BraidWitness::Condition::missing_neighbor ? "missing-neighbor-cluster" : "outside-neighbor";
        w["other"] = r.witness->other;
        j["failure_witness"] = w;
    } else {
        j["failure_witness"] = nullptr;
    }
    j["partition"] = to_json(r.partition);
    return j;
}

Json to_json(const GameVerdict& v) {
    Json j;
    j["winner"] = to_string(v.winner);
    j["reason"] = v.reason ? Json(*v.reason) : Json(nullptr);
    j["trace"] = vec(v.trace);
    return j;
}

Json to_json(const AtypicalReport& r) {
    Json j;
    j["atypical"] = vec(r.atypical);
    j["typical"] = vec(r.typical);
    j["exempt"] = vec(r.exempt);
    return j;
}

Json to_json(const LocalStructure& s) {
    Json j;
    j["V"] = vec(s.V);
    j["Z"] = vec(s.Z);
    j["W"] = vec(s.W);
    return j;
}

Json to_json(const SweepResult& r) {
    Json j;
    j["n"] = r.n;
    j["quantity"] = to_string(r.quantity);
    j["max"] = to_string(r.max);
    j["extremal_codes"] = r.extremal_codes;
    j["graphs_scanned"] = std::to_string(r.graphs_scanned);
    j["audits"] = r.audits;
    return j;
}

Json to_json(const UniquenessReport& r) {
    Json j;
    j["n"] = r.n;
    j["max"] = to_string(r.max);
    j["graphs"] = r.graphs;
    j["pairs"] = r.pairs;
    j["central_multisets"] = r.central_multisets;
    j["counterexamples"] = r.counterexamples;
    j["ok"] = r.ok();
    return j;
}

ClusterPartition partition_from_json(const Json& j) {
    try {
        ClusterPartition p;
        p.clusters = j.at("clusters").get<std::vector<std::vector<int>>>();
        p.cyclic = j.value("cyclic", false);
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad partition JSON: ") + e.what());
    }
}

}  // namespace ic
