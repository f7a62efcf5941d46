#include "gainv/io.hpp"

#include <fstream>

namespace gainv {

using nlohmann::json;

json fq_to_json(const Fq& x) {
    if (x.data()->m == 1) return x.coeffs()[0];
    return json(x.coeffs());
}

Fq fq_from_json(const Field& k, const json& j) {
    if (j.is_number_integer()) return k.from_int(j.get<int64_t>());
    if (j.is_array()) {
        if (k.m() == 1 && j.size() > 1)
            throw SchemaError("field element array longer than field degree");
        std::vector<uint32_t> c;
        for (const auto& v : j) {
            if (!v.is_number_integer()) throw SchemaError("field element coefficients must be integers");
            int64_t x = v.get<int64_t>();
            int64_t r = x % (int64_t)k.p();
            if (r < 0) r += k.p();
            c.push_back((uint32_t)r);
        }
        if (c.size() > k.m()) throw SchemaError("field element array longer than field degree");
        return k.from_coeffs(std::move(c));
    }
    throw SchemaError("field element must be an integer or coefficient array");
}

json upoly_to_json(const UPoly& f) {
    json arr = json::array();
    for (int d = 0; d <= f.degree(); ++d) arr.push_back(fq_to_json(f.coeff((size_t)d)));
    return arr;
}

UPoly upoly_from_json(const Field& k, const json& j) {
    if (!j.is_array()) throw SchemaError("polynomial must be a coefficient array");
    std::vector<Fq> c;
    for (const auto& v : j) c.push_back(fq_from_json(k, v));
    return UPoly(k, std::move(c));
}

json mpoly_to_json(const MPoly& f) {
    // term list [[exps...], coeff] in container order; stable across runs
    json arr = json::array();
    for (const auto& [e, c] : f.terms()) {
        json term = json::array();
        term.push_back(json(e));
        term.push_back(fq_to_json(c));
        arr.push_back(std::move(term));
    }
    return arr;
}

json rep_to_json(const Representation& rep) {
    json j;
    j["p"] = rep.k.p();
    j["field_degree"] = rep.k.m();
    if (rep.k.m() > 1) j["modulus"] = rep.k.modulus();
    j["n"] = rep.n;
    json q = json::object();
    for (const auto& [key, poly] : rep.q) {
        std::string name = std::to_string(key.first) + "," + std::to_string(key.second);
        q[name] = upoly_to_json(poly);
    }
    j["q"] = q;
    return j;
}

Representation rep_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("representation must be an object");
    for (const auto& key : {"p", "n", "q"})
        if (!j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
    if (!j["p"].is_number_integer() || j["p"].get<int64_t>() < 2)
        throw SchemaError("\"p\" must be an integer >= 2");
    uint32_t p = j["p"].get<uint32_t>();
    uint32_t m = 1;
    if (j.contains("field_degree")) {
        if (!j["field_degree"].is_number_integer() || j["field_degree"].get<int64_t>() < 1)
            throw SchemaError("\"field_degree\" must be a positive integer");
        m = j["field_degree"].get<uint32_t>();
    }
    std::optional<std::vector<uint32_t>> modulus;
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array()) throw SchemaError("\"modulus\" must be an array");
        std::vector<uint32_t> mm;
        for (const auto& v : j["modulus"]) {
            if (!v.is_number_integer() || v.get<int64_t>() < 0)
                throw SchemaError("\"modulus\" entries must be nonnegative integers");
            mm.push_back(v.get<uint32_t>());
        }
        modulus = std::move(mm);
    }
    Field k;
    try {
        k = build_field(p, m, modulus);
    } catch (const FieldError& e) {
        throw SchemaError(std::string("invalid field: ") + e.what());
    }
    if (!j["n"].is_number_integer() || j["n"].get<int64_t>() < 1)
        throw SchemaError("\"n\" must be a positive integer");
    Representation rep;
    rep.k = k;
    rep.n = j["n"].get<uint32_t>();
    if (!j["q"].is_object()) throw SchemaError("\"q\" must be an object");
    for (const auto& [name, val] : j["q"].items()) {
        auto comma = name.find(',');
        if (comma == std::string::npos)
            throw SchemaError("entry key \"" + name + "\" is not of the form \"i,j\"");
        uint32_t i = 0, jj = 0;
        try {
            i = (uint32_t)std::stoul(name.substr(0, comma));
            jj = (uint32_t)std::stoul(name.substr(comma + 1));
        } catch (...) {
            throw SchemaError("entry key \"" + name + "\" is not of the form \"i,j\"");
        }
        if (jj >= i || i > rep.n || jj < 1)
            throw SchemaError("entry (" + name + ") outside the strict lower triangle");
        UPoly poly = upoly_from_json(k, val);
        if (!poly.is_zero()) rep.set_entry(i, jj, std::move(poly));
    }
    return rep;
}

Representation load_rep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return rep_from_json(j);
}

}  // namespace gainv
