// JSON wire formats: polynomials as coefficient/monomial lists, graded maps
// and presented modules, quiver representations with row-major matrices.
#ifndef FOURPOINTS_JSON_IO_HPP
#define FOURPOINTS_JSON_IO_HPP

#include <json.hpp>

#include "fourpoints/graded.hpp"
#include "fourpoints/quiver.hpp"

namespace fourpoints {

using nlohmann::json;

inline json to_json(const Poly& f)
{
    json terms = json::array();
    for (const auto& [m, v] : f.terms())
        terms.push_back({{"m", {m.a, m.b, m.c}}, {"c", v.raw()}});
    return terms;
}

inline Poly poly_from_json(const json& j)
{
    Poly f;
    for (const auto& t : j) {
        const auto& m = t.at("m");
        f.add_term({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()},
                   Fp(t.at("c").get<long long>()));
    }
    return f;
}

inline json to_json(const RingId& ring)
{
    switch (ring.kind()) {
        case RingId::Kind::ambient: return json("S");
        case RingId::Kind::quotient: return json("R");
        case RingId::Kind::hypersurface:
            return json{{"Ss", {ring.parameter().c0.raw(), ring.parameter().c1.raw()}}};
    }
    return json();
}

inline RingId ring_from_json(const json& j)
{
    if (j.is_string()) {
        if (j == "S") return RingId::S();
        if (j == "R") return RingId::R();
        throw std::invalid_argument("ring_from_json: unknown ring tag");
    }
    const auto& s = j.at("Ss");
    return RingId::Ss(ProjPair(Fp(s.at(0).get<long long>()), Fp(s.at(1).get<long long>())));
}

inline json to_json(const FreeGraded& f) { return json{{"gens", f.gens}}; }

inline json to_json(const GradedMap& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.tgt().count(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.src().count(); ++j) row.push_back(to_json(m.entry(i, j)));
        rows.push_back(row);
    }
    return json{{"src", to_json(m.src())}, {"tgt", to_json(m.tgt())}, {"entries", rows}};
}

inline GradedMap graded_map_from_json(const json& j, const RingId& ring)
{
    FreeGraded src{ring, j.at("src").at("gens").get<std::vector<int>>()};
    FreeGraded tgt{ring, j.at("tgt").at("gens").get<std::vector<int>>()};
    std::vector<std::vector<Poly>> e;
    for (const auto& row : j.at("entries")) {
        std::vector<Poly> r;
        for (const auto& cell : row) r.push_back(poly_from_json(cell));
        e.push_back(std::move(r));
    }
    return GradedMap(std::move(src), std::move(tgt), std::move(e));
}

inline json to_json(const PresentedModule& m)
{
    return json{{"ring", to_json(m.ring())}, {"presentation", to_json(m.presentation)}};
}

inline PresentedModule module_from_json(const json& j)
{
    RingId ring = ring_from_json(j.at("ring"));
    return {graded_map_from_json(j.at("presentation"), ring)};
}

inline json to_json(const Mat& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).raw());
        rows.push_back(row);
    }
    return rows;
}

inline Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols)
{
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = Fp(j.at(i).at(c).get<long long>());
    return m;
}

inline json to_json(const Rep& r)
{
    json maps = json::array();
    for (int i = 0; i < 4; ++i) maps.push_back(to_json(r.maps[static_cast<std::size_t>(i)]));
    return json{{"dims", {r.dims[0], r.dims[1], r.dims[2], r.dims[3], r.dims[4]}}, {"maps", maps}};
}

inline Rep rep_from_json(const json& j)
{
    const auto& d = j.at("dims");
    Rep r(d.at(0).get<std::size_t>(), {d.at(1).get<std::size_t>(), d.at(2).get<std::size_t>(),
                                       d.at(3).get<std::size_t>(), d.at(4).get<std::size_t>()});
    for (int i = 0; i < 4; ++i)
        r.maps[static_cast<std::size_t>(i)] =
            mat_from_json(j.at("maps").at(i), r.dims[0], r.dims[static_cast<std::size_t>(i) + 1]);
    return r;
}

} // namespace fourpoints

#endif
