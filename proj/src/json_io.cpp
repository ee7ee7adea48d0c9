#include "repsplit/json_io.hpp"

#include <map>

#include <json.hpp>

namespace repsplit {

using nlohmann::json;

namespace {

json field_to_json(const FieldPtr& f, int digits) {
    if (!f)
        return nullptr;
    json minpoly = json::array();
    for (const auto& c : f->minpoly().coeffs())
        minpoly.push_back(rational_str(c));
    // refine, snap the center to the decimal grid, inflate the radius by the
    // rounding error, and make sure the printed box still isolates the root
    for (int d = digits;; d *= 2) {
        Disk box = f->root_box(d + 4);
        Rational grid = pow10_inv(d);
        std::string re = decimal_str(box.re, d);
        std::string im = decimal_str(box.im, d);
        std::string rad = decimal_str_outward(box.rad + 2 * grid, d);
        Disk emitted(parse_rational(re), parse_rational(im), parse_rational(rad));
        try {
            NumberField::create(f->minpoly(), emitted);
        } catch (const BoxNotIsolating&) {
            if (d > kMaxDigits)
                throw;
            continue;
        }
        json approx{{"re", re}, {"im", im}, {"radius", rad}};
        return json{{"minpoly", minpoly}, {"approx", approx}};
    }
}

// `field_json` is the prebuilt serialization of the one field of the run.
json element_to_json(const FieldElement& e, const json& field_json) {
    json coords = json::array();
    for (const auto& c : e.coords())
        coords.push_back(rational_str(c));
    return json{{"field", e.field() ? field_json : json(nullptr)}, {"coords", coords}};
}

FieldPtr field_from_json(const json& j, FieldPtr& cache) {
    if (j.is_null())
        return nullptr;
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("minpoly"))
        coeffs.push_back(parse_rational(c.get<std::string>()));
    QPoly minpoly(std::move(coeffs));
    if (cache && cache->minpoly() == minpoly)
        return cache;
    const auto& a = j.at("approx");
    Disk box(parse_rational(a.at("re").get<std::string>()),
             parse_rational(a.at("im").get<std::string>()),
             parse_rational(a.at("radius").get<std::string>()));
    cache = NumberField::create(std::move(minpoly), box);
    return cache;
}

FieldElement element_from_json(const json& j, FieldPtr& cache) {
    FieldPtr f = field_from_json(j.at("field"), cache);
    std::vector<Rational> coords;
    for (const auto& c : j.at("coords"))
        coords.push_back(parse_rational(c.get<std::string>()));
    return FieldElement::from_coords(f, std::move(coords));
}

} // namespace

std::string decomposition_to_json(const Decomposition& dec, const OrbitalBasis& basis, int digits,
                                  const TransformBasis* tbasis) {
    json j;
    j["degree"] = dec.degree;
    j["rank"] = dec.rank;
    json suborbits = json::array();
    for (int r = 0; r < basis.rank; ++r)
        suborbits.push_back(json{{"length", basis.suborbit_lengths[static_cast<std::size_t>(r)]},
                                 {"transpose_of", basis.transpose_of[static_cast<std::size_t>(r)] + 1}});
    j["suborbits"] = std::move(suborbits);
    json field_json = field_to_json(dec.field, digits);
    j["field"] = field_json;

    // family sizes for the multiplicity annotation
    std::map<int, long> family_size;
    for (const auto& p : dec.projectors)
        if (p.multiplicity_group >= 0)
            ++family_size[p.multiplicity_group];

    json components = json::array();
    for (const auto& p : dec.projectors) {
        json comp;
        comp["dimension"] = p.dimension;
        comp["multiplicity"] =
            p.multiplicity_group >= 0 ? family_size[p.multiplicity_group] : 1;
        comp["conjugate_of"] = p.conjugate_of >= 0 ? json(p.conjugate_of + 1) : json(nullptr);
        json coeffs = json::array();
        for (const auto& c : p.coeff)
            coeffs.push_back(element_to_json(c, field_json));
        comp["coefficients"] = std::move(coeffs);
        components.push_back(std::move(comp));
    }
    j["components"] = std::move(components);

    if (tbasis) {
        json basis_json;
        basis_json["block_widths"] = tbasis->block_widths;
        json cols = json::array();
        for (const auto& col : tbasis->columns) {
            json jc = json::array();
            for (const auto& v : col)
                jc.push_back(element_to_json(v, field_json));
            cols.push_back(std::move(jc));
        }
        basis_json["columns"] = std::move(cols);
        j["basis"] = std::move(basis_json);
    }
    return j.dump(2);
}

ParsedDecomposition decomposition_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("bad JSON artifact: ") + e.what());
    }
    try {
        ParsedDecomposition out;
        out.dec.degree = j.at("degree").get<Point>();
        out.dec.rank = j.at("rank").get<int>();
        for (const auto& s : j.at("suborbits")) {
            out.suborbit_lengths.push_back(s.at("length").get<Point>());
            out.transpose_of.push_back(s.at("transpose_of").get<int>() - 1);
        }
        FieldPtr cache;
        field_from_json(j.at("field"), cache);
        int next_family = 0;
        const auto& comps = j.at("components");
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const auto& comp = comps[i];
            Projector p;
            p.dimension = comp.at("dimension").get<long>();
            p.conjugate_of =
                comp.at("conjugate_of").is_null() ? -1 : comp.at("conjugate_of").get<int>() - 1;
            for (const auto& c : comp.at("coefficients"))
                p.coeff.push_back(element_from_json(c, cache));
            long mult = comp.at("multiplicity").get<long>();
            if (mult > 1) {
                // members of one family are adjacent in the canonical order
                if (!out.dec.projectors.empty() &&
                    out.dec.projectors.back().multiplicity_group >= 0 &&
                    out.dec.projectors.back().dimension == p.dimension) {
                    int tag = out.dec.projectors.back().multiplicity_group;
                    long have = 0;
                    for (const auto& q : out.dec.projectors)
                        if (q.multiplicity_group == tag)
                            ++have;
                    p.multiplicity_group = have < mult ? tag : next_family++;
                } else {
                    p.multiplicity_group = next_family++;
                }
            }
            out.dec.projectors.push_back(std::move(p));
        }
        out.dec.field = cache;
        return out;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("bad JSON artifact: ") + e.what());
    }
}

std::string tables_to_json(const OrbitalBasis& basis, const StructureConstants& sc) {
    json j;
    j["degree"] = basis.degree;
    j["rank"] = basis.rank;
    json suborbits = json::array();
    for (int r = 0; r < basis.rank; ++r)
        suborbits.push_back(json{{"length", basis.suborbit_lengths[static_cast<std::size_t>(r)]},
                                 {"transpose_of", basis.transpose_of[static_cast<std::size_t>(r)] + 1}});
    j["suborbits"] = std::move(suborbits);
    j["commutative"] = sc.commutative;
    json tensor = json::array();
    for (int p = 0; p < sc.rank; ++p)
        for (int q = 0; q < sc.rank; ++q)
            for (int r = 0; r < sc.rank; ++r)
                if (std::uint32_t v = sc.get(p, q, r))
                    tensor.push_back(json::array({p + 1, q + 1, r + 1, v}));
    j["tensor"] = std::move(tensor);
    return j.dump(2);
}

} // namespace repsplit
