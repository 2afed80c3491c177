#include "exbound/card_io.hpp"

#include <fstream>
#include <sstream>

namespace exbound {

using nlohmann::json;

namespace {

std::string join_diagnostics(const std::vector<std::string>& diagnostics)
{
    std::ostringstream out;
    out << "malformed field card:";
    for (const auto& d : diagnostics)
        out << "\n  - " << d;
    return out.str();
}

json small_integer_to_json(const mpz_class& value)
{
    if (value.fits_slong_p())
        return value.get_si();
    return value.get_str();
}

json vector_to_json(const IntVector& v, bool small)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(small ? small_integer_to_json(x) : integer_to_json(x));
    return out;
}

json decimal_to_json(const DecimalInterval& d)
{
    return {{"mid", d.mid}, {"rad", d.rad}};
}

json complex_to_json(const DecimalComplex& z)
{
    return {{"re", decimal_to_json(z.re)}, {"im", decimal_to_json(z.im)}};
}

// Collects diagnostics while walking a JSON document.
class Reader
{
public:
    std::vector<std::string> diagnostics;

    template <typename F>
    void field(const json& obj, const std::string& key, bool required, F&& read)
    {
        if (!obj.is_object()) {
            diagnostics.push_back("expected an object around '" + key + "'");
            return;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required)
                diagnostics.push_back("missing field '" + key + "'");
            return;
        }
        try {
            read(*it);
        } catch (const std::exception& ex) {
            diagnostics.push_back("field '" + key + "': " + ex.what());
        }
    }
};

IntVector read_vector(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of integers");
    IntVector v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

IntMatrix read_matrix(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of integer arrays");
    IntMatrix m;
    for (const auto& row : j)
        m.push_back(read_vector(row));
    return m;
}

DecimalInterval read_decimal(const json& j)
{
    if (!j.is_object() || !j.contains("mid") || !j.contains("rad") || !j["mid"].is_string()
        || !j["rad"].is_string())
        throw std::invalid_argument("expected {\"mid\": string, \"rad\": string}");
    DecimalInterval d{j["mid"].get<std::string>(), j["rad"].get<std::string>()};
    d.at(64);  // syntax check
    return d;
}

DecimalComplex read_complex(const json& j)
{
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("expected {\"re\": interval, \"im\": interval}");
    return {read_decimal(j["re"]), read_decimal(j["im"])};
}

}  // namespace

CardFormatError::CardFormatError(std::vector<std::string> diagnostics)
    : FieldError(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

json integer_to_json(const mpz_class& value)
{
    return value.get_str();
}

mpz_class integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class v;
        const std::string s = j.get<std::string>();
        if (s.empty() || v.set_str(s, 10) != 0)
            throw std::invalid_argument("'" + s + "' is not a decimal integer");
        return v;
    }
    throw std::invalid_argument("expected an integer or a decimal string");
}

json card_to_json(const FieldCard& card)
{
    json j;
    j["schema"] = kCardSchema;
    j["label"] = card.label;
    j["degree"] = card.degree;
    j["discriminant"] = integer_to_json(card.discriminant);
    j["class_number"] = integer_to_json(card.class_number);
    j["unit_rank"] = card.unit_rank;
    j["regulator"] = decimal_to_json(card.regulator);
    j["ramified_primes"] = vector_to_json(card.ramified_primes, false);
    j["basis"] = card.basis_names;
    json table = json::array();
    for (const auto& row : card.multiplication) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(vector_to_json(v, true));
        table.push_back(r);
    }
    j["multiplication_table"] = table;
    json galois = json::array();
    for (const auto& g : card.galois) {
        json m = json::array();
        for (const auto& row : g)
            m.push_back(vector_to_json(row, true));
        galois.push_back(m);
    }
    j["galois_group"] = galois;
    json embeddings = json::array();
    for (const auto& e : card.embeddings) {
        json values = json::array();
        for (const auto& v : e.basis_values)
            values.push_back(complex_to_json(v));
        embeddings.push_back({{"real", e.real}, {"values", values}});
    }
    j["embeddings"] = embeddings;
    j["distinguished_embedding"] = card.distinguished_embedding;
    json units = json::array();
    for (const auto& u : card.fundamental_units)
        units.push_back(vector_to_json(u.coords, false));
    j["fundamental_units"] = units;
    j["delta_k"] = card.delta_k;
    j["torsion_order"] = card.torsion_order;
    j["is_galois_asserted"] = card.is_galois_asserted;
    j["hcf_free_asserted"] = card.hcf_free_asserted;
    if (card.quadratic_radicand)
        j["quadratic_radicand"] = integer_to_json(*card.quadratic_radicand);
    if (card.power_basis) {
        const PowerBasis& pb = *card.power_basis;
        json rows = json::array();
        for (const auto& row : pb.basis)
            rows.push_back(vector_to_json(row, true));
        json roots = json::array();
        for (const auto& r : pb.roots)
            roots.push_back(complex_to_json(r));
        j["power_basis"] = {{"polynomial", vector_to_json(pb.polynomial, false)},
                            {"basis", rows},
                            {"denominator", integer_to_json(pb.denominator)},
                            {"roots", roots}};
    }
    json subfields = json::array();
    for (const auto& s : card.quadratic_subfields)
        subfields.push_back({{"radicand", integer_to_json(s.radicand)}, {"sqrt", vector_to_json(s.sqrt.coords, false)}});
    j["quadratic_subfields"] = subfields;
    json local = json::object();
    for (const auto& [l, degrees] : card.local_degrees)
        local[l.get_str()] = degrees;
    j["local_degrees"] = local;
    json supplied = json::array();
    for (const auto& s : card.supplied_split_primes)
        supplied.push_back({{"q", integer_to_json(s.q)}, {"generator", vector_to_json(s.generator.coords, false)}});
    j["split_primes"] = supplied;
    return j;
}

FieldCard card_from_json(const json& j)
{
    Reader r;
    FieldCard card;
    if (!j.is_object())
        throw CardFormatError({"card must be a JSON object"});
    r.field(j, "schema", true, [&](const json& v) {
        if (!v.is_string() || v.get<std::string>() != kCardSchema)
            throw std::invalid_argument(std::string("expected \"") + kCardSchema + "\"");
    });
    r.field(j, "label", false, [&](const json& v) { card.label = v.get<std::string>(); });
    r.field(j, "degree", true, [&](const json& v) {
        card.degree = v.get<int>();
        if (card.degree < 1)
            throw std::invalid_argument("must be positive");
    });
    r.field(j, "discriminant", true, [&](const json& v) { card.discriminant = integer_from_json(v); });
    r.field(j, "class_number", true, [&](const json& v) { card.class_number = integer_from_json(v); });
    r.field(j, "unit_rank", true, [&](const json& v) { card.unit_rank = v.get<int>(); });
    r.field(j, "regulator", true, [&](const json& v) { card.regulator = read_decimal(v); });
    r.field(j, "ramified_primes", true, [&](const json& v) { card.ramified_primes = read_vector(v); });
    r.field(j, "basis", true, [&](const json& v) { card.basis_names = v.get<std::vector<std::string>>(); });
    r.field(j, "multiplication_table", true, [&](const json& v) {
        if (!v.is_array())
            throw std::invalid_argument("expected nested integer arrays");
        for (const auto& row : v)
            card.multiplication.push_back(read_matrix(row));
    });
    r.field(j, "galois_group", true, [&](const json& v) {
        if (!v.is_array())
            throw std::invalid_argument("expected an array of matrices");
        for (const auto& m : v)
            card.galois.push_back(read_matrix(m));
    });
    r.field(j, "embeddings", true, [&](const json& v) {
        if (!v.is_array())
            throw std::invalid_argument("expected an array");
        for (const auto& e : v) {
            EmbeddingData data;
            data.real = e.at("real").get<bool>();
            for (const auto& z : e.at("values"))
                data.basis_values.push_back(read_complex(z));
            card.embeddings.push_back(std::move(data));
        }
    });
    r.field(j, "distinguished_embedding", false, [&](const json& v) { card.distinguished_embedding = v.get<int>(); });
    r.field(j, "fundamental_units", true, [&](const json& v) {
        for (const auto& u : v)
            card.fundamental_units.emplace_back(read_vector(u));
    });
    r.field(j, "delta_k", true, [&](const json& v) {
        card.delta_k = v.get<std::string>();
        DecimalInterval{card.delta_k, "0"}.at(64);
    });
    r.field(j, "torsion_order", false, [&](const json& v) { card.torsion_order = v.get<int>(); });
    r.field(j, "is_galois_asserted", true, [&](const json& v) { card.is_galois_asserted = v.get<bool>(); });
    r.field(j, "hcf_free_asserted", true, [&](const json& v) { card.hcf_free_asserted = v.get<bool>(); });
    r.field(j, "quadratic_radicand", false, [&](const json& v) { card.quadratic_radicand = integer_from_json(v); });
    r.field(j, "power_basis", false, [&](const json& v) {
        PowerBasis pb;
        pb.polynomial = read_vector(v.at("polynomial"));
        pb.basis = read_matrix(v.at("basis"));
        pb.denominator = integer_from_json(v.at("denominator"));
        for (const auto& z : v.at("roots"))
            pb.roots.push_back(read_complex(z));
        card.power_basis = std::move(pb);
    });
    r.field(j, "quadratic_subfields", false, [&](const json& v) {
        for (const auto& s : v)
            card.quadratic_subfields.push_back(
                {integer_from_json(s.at("radicand")), RingElement(read_vector(s.at("sqrt")))});
    });
    r.field(j, "local_degrees", false, [&](const json& v) {
        for (const auto& [key, degrees] : v.items())
            card.local_degrees[mpz_class(key)] = degrees.get<std::vector<int>>();
    });
    r.field(j, "split_primes", false, [&](const json& v) {
        for (const auto& s : v)
            card.supplied_split_primes.push_back(
                {integer_from_json(s.at("q")), RingElement(read_vector(s.at("generator")))});
    });
    if (!r.diagnostics.empty())
        throw CardFormatError(r.diagnostics);
    validate_card(card);
    return card;
}

FieldCard load_card(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw CardFormatError({"cannot open " + path.string()});
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& ex) {
        throw CardFormatError({path.string() + ": " + ex.what()});
    }
    return card_from_json(j);
}

void save_card(const FieldCard& card, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw FieldError("cannot write " + path.string());
    out << card_to_json(card).dump(2) << '\n';
}

}  // namespace exbound
