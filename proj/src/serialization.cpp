#include "domiperf/serialization.hpp"

namespace domiperf {

nlohmann::json set_json(VertexSet s)
{
    auto out = nlohmann::json::array();
    for (int v : s)
        out.push_back(v + 1);
    return out;
}

nlohmann::json profile_json(const ParameterProfile& p)
{
    auto per_vertex = nlohmann::json::array();
    for (int a : p.per_vertex_ind)
        per_vertex.push_back(a);
    return {
        {"gamma", p.gamma},
        {"ind_dom", p.ind_dom},
        {"common_ind", p.common_ind},
        {"ind", p.ind},
        {"witness_gamma", set_json(p.witness_gamma)},
        {"witness_ind_dom", set_json(p.witness_ind_dom)},
        {"witness_ind", set_json(p.witness_ind)},
        {"per_vertex_ind", per_vertex},
    };
}

nlohmann::json verdict_json(const PerfectionVerdict& v)
{
    nlohmann::json out{{"perfect", v.perfect}, {"method", to_string(v.method)}};
    if (v.subgraph) {
        out["witness"] = {
            {"vertices", set_json(v.subgraph->vertices)},
            {"gamma", v.subgraph->gamma},
            {"common_ind", v.subgraph->common_ind},
        };
    }
    if (v.pattern) {
        auto map = nlohmann::json::array();
        for (int h : v.pattern->embedding.map)
            map.push_back(h + 1);
        out["witness"] = {{"pattern", v.pattern->pattern}, {"embedding", map}};
    }
    return out;
}

}  // namespace domiperf
