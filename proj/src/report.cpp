#include "exbound/report.hpp"

#include "exbound/card_io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

namespace exbound {

using nlohmann::json;

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

json integer_summary(const mpz_class& value, const IntegerFormat& format)
{
    std::string digits = value.get_str();
    const int sign = sgn(value);
    if (sign < 0)
        digits.erase(0, 1);
    json j{{"sign", sign}, {"digits", digits.size()}};
    if (format.full_digits || digits.size() <= format.digit_threshold) {
        j["decimal"] = value.get_str();
        return j;
    }
    j["leading"] = digits.substr(0, format.edge_digits);
    j["trailing"] = digits.substr(digits.size() - format.edge_digits);
    j["sha256"] = sha256_hex(value.get_str());
    return j;
}

json interval_json(const Interval& x, int digits)
{
    const auto [mid, rad] = x.to_decimal(digits);
    return {{"mid", mid}, {"rad", rad}};
}

namespace {

json ring_json(const RingElement& x)
{
    json a = json::array();
    for (const auto& c : x.coords)
        a.push_back(integer_to_json(c));
    return a;
}

json integers_json(const std::vector<mpz_class>& xs)
{
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(integer_to_json(x));
    return a;
}

json eps_json(const ExponentVector& eps)
{
    json j = json::object();
    for (std::size_t s = 0; s < eps.exponents.size(); ++s)
        j[std::to_string(s)] = eps.exponents[s];
    return j;
}

json weil_json(const WeilNumber& w)
{
    return {{"a", integer_to_json(w.a)},
            {"n", integer_to_json(w.n)},
            {"root", w.is_double_root() ? "double" : (w.root == RootChoice::upper ? "upper" : "lower")}};
}

json factorization_json(const FactorizationResult& f, const IntegerFormat& format)
{
    json factors = json::array();
    for (const auto& pp : f.known_factors)
        factors.push_back({{"prime", integer_to_json(pp.prime)}, {"multiplicity", pp.multiplicity}});
    json j{{"status", f.complete() ? "complete" : "partial"}, {"factors", factors}};
    if (!f.complete()) {
        j["cofactor"] = integer_summary(f.cofactor, format);
        j["cofactor_is_probable_prime"] = f.cofactor_is_probable_prime;
    }
    return j;
}

std::string tolerance_string(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

json membership_json(const MembershipResult& m)
{
    json j{{"p", integer_to_json(m.p)}, {"member", m.member}, {"sources", m.sources}};
    j["witness_entry"] = m.witness ? json(*m.witness) : json(nullptr);
    return j;
}

}  // namespace

json field_summary_json(const FieldCard& card)
{
    return {{"label", card.label},
            {"degree", card.degree},
            {"discriminant", integer_to_json(card.discriminant)},
            {"class_number", integer_to_json(card.class_number)},
            {"unit_rank", card.unit_rank},
            {"regulator", {{"mid", card.regulator.mid}, {"rad", card.regulator.rad}}},
            {"ramified_primes", integers_json(card.ramified_primes)}};
}

json config_json(const FieldCard& card, const ExceptionalConfig& config)
{
    return {{"A1", config.A1.get_str()},
            {"delta_k", config.delta_for(card)},
            {"delta_source", config.delta_override ? "override" : "card"},
            {"discriminant_in_bound", "|d_k|"},
            {"factor_units", std::to_string(config.budget.units)},
            {"trial_limit", config.budget.trial_limit},
            {"precision_initial", config.precision.initial},
            {"precision_cap", config.precision.cap},
            {"height_tolerance", tolerance_string(config.precision.rel_tolerance)},
            {"threads", config.threads},
            {"enumeration_cap", config.enumeration_cap},
            {"digit_threshold", config.digit_threshold},
            {"full_digits", config.full_digits},
            {"list_limit", config.list_limit},
            {"best_effort", config.best_effort},
            {"snew_scan_limit", integer_to_json(config.snew_scan_limit)}};
}

json constants_json(const BoundConstants& c)
{
    return {{"A1", c.A1.get_str()},
            {"delta_k", c.delta},
            {"C1", interval_json(c.C1)},
            {"C2", interval_json(c.C2)},
            {"C2_is_one", c.C2_is_one},
            {"log10_a", interval_json(c.log10_a)},
            {"log10_C", interval_json(c.log10_C)},
            {"leading_digits_C", c.leading_digits},
            {"precision_bits", c.precision}};
}

json exceptional_report(const FieldCard& card, const ExceptionalRun& run, const ExceptionalConfig& config,
                        const ReportExtras& extras)
{
    const IntegerFormat format{config.digit_threshold, config.full_digits};
    json j;
    j["schema"] = kExceptionalSchema;
    j["field"] = field_summary_json(card);
    j["config"] = config_json(card, config);

    json snew = json::array();
    for (const auto& d : run.snew) {
        json s{{"q", integer_to_json(d.q)},
               {"raw_generator", ring_json(d.raw_generator)},
               {"generator", ring_json(d.generator)},
               {"generator_norm", integer_to_json(d.generator_norm)},
               {"height_check",
                {{"height", interval_json(d.height_check.height)},
                 {"bound", interval_json(d.height_check.bound)},
                 {"exact", d.height_check.exact},
                 {"holds", d.height_check.holds}}},
               {"meets_split_prime_bound", d.meets_split_prime_bound}};
        s["ideal"] = d.ideal ? json{{"a", integer_to_json(d.ideal->a)},
                                    {"b", integer_to_json(d.ideal->b)},
                                    {"c", integer_to_json(d.ideal->c)}}
                             : json(nullptr);
        s["class_index"] = d.class_index ? json(*d.class_index) : json(nullptr);
        snew.push_back(std::move(s));
    }
    j["snew"] = std::move(snew);
    j["exponent_vectors"] = run.exponent_count;
    j["weil_numbers"] = run.weil_count;
    j["processed"] = run.processed;
    j["zero_excluded"] = run.zero_excluded;

    std::map<mpz_class, const FactorizationResult*> factored;
    if (extras.best_effort)
        for (const auto& item : extras.best_effort->items)
            factored[item.m] = &item.result;

    json entries = json::array();
    for (std::size_t i = 0; i < run.entries.size(); ++i) {
        const M2Entry& e = run.entries[i];
        json x{{"q", integer_to_json(e.q)},
               {"eps", eps_json(e.eps)},
               {"beta", weil_json(e.beta)},
               {"beta_in_k", e.beta_in_k},
               {"m", integer_summary(e.m, format)},
               {"size_bound_holds", run.prop75[i].holds},
               {"size_bound_exact", run.prop75[i].exact}};
        const mpz_class a = e.m < 0 ? mpz_class(-e.m) : e.m;
        auto it = factored.find(a);
        x["factorization"] = it == factored.end() ? json{{"status", "not_attempted"}}
                                                  : factorization_json(*it->second, format);
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);

    json p74 = json::array();
    for (const auto& r : run.prop74)
        p74.push_back({{"q", integer_to_json(run.snew[r.datum].q)},
                       {"eps_index", r.eps_index},
                       {"abs_value", interval_json(r.abs_value)},
                       {"holds", r.holds},
                       {"exact", r.exact}});
    j["conjugate_size_checks"] = std::move(p74);
    j["conjugate_size_violations"] = run.prop74_violations();
    j["entry_size_violations"] = run.prop75_violations();

    j["T"] = integers_json(run.T);
    j["Ram"] = integers_json(run.Ram);
    if (extras.listing) {
        j["list_limit"] = extras.listing->limit;
        j["N0"] = integers_json(extras.listing->N0);
        j["N1"] = integers_json(extras.listing->N1);
        j["bound_dominates_listing"] = bound_dominates(run, extras.listing->N1);
    }
    if (extras.queries) {
        json q = json::array();
        for (const auto& m : *extras.queries)
            q.push_back(membership_json(m));
        j["membership"] = std::move(q);
    }
    if (extras.best_effort) {
        json unresolved = json::array();
        for (const auto& c : extras.best_effort->unresolved)
            unresolved.push_back(integer_summary(c, format));
        j["best_effort"] = {{"N0_found", integers_json(extras.best_effort->N0_found)},
                            {"unresolved_cofactors", std::move(unresolved)}};
    }
    j["constants"] = constants_json(run.constants);
    return j;
}

json certificate_json(const Certificate& cert, const ExceptionalConfig& config)
{
    json j;
    j["schema"] = kCertificateSchema;
    j["field"] = field_summary_json(cert.field);
    j["quaternion"] = {{"d", integer_to_json(cert.disc.d)}, {"primes", integers_json(cert.disc.primes)}};
    j["config"] = config_json(cert.field, config);

    json hyps = json::array();
    for (const auto& h : cert.hypotheses)
        hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
    j["hypotheses"] = std::move(hyps);
    j["refused"] = cert.refused();
    j["refusals"] = cert.refusals;

    json adm{{"scanned_up_to", integer_to_json(cert.admissible.scanned_up_to)}};
    adm["q"] = cert.admissible.q ? json(integer_to_json(*cert.admissible.q)) : json(nullptr);
    adm["threshold"] = cert.admissible.q ? json(integer_to_json(cert.admissible.threshold)) : json(nullptr);
    json rejected = json::array();
    for (const auto& r : cert.admissible.rejected) {
        json local = json::object();
        for (const auto& [l, t] : r.local)
            local[l.get_str()] = to_string(t);
        rejected.push_back({{"q", integer_to_json(r.q)}, {"local", std::move(local)}});
    }
    adm["rejected"] = std::move(rejected);
    j["admissible"] = std::move(adm);

    j["quaternion_splits_over_k"] = cert.quaternion_splits_over_k;
    j["branch"] = to_string(cert.branch);
    j["branch_statement"] = branch_statement(cert.branch);

    if (cert.exceptional) {
        const ExceptionalRun& run = *cert.exceptional;
        json snew = json::array();
        for (const auto& d : run.snew)
            snew.push_back({{"q", integer_to_json(d.q)}, {"generator", ring_json(d.generator)}});
        j["snew"] = std::move(snew);
        j["T"] = integers_json(run.T);
        j["Ram"] = integers_json(run.Ram);
        j["m_entries"] = run.entries.size();
        j["processed"] = run.processed;
        j["constants"] = constants_json(run.constants);
        if (cert.listing) {
            j["list_limit"] = cert.listing->limit;
            j["N1"] = integers_json(cert.listing->N1);
            j["bound_dominates_listing"] = bound_dominates(run, cert.listing->N1);
        }
        json excluded = json::array();
        for (const auto& e : cert.excluded)
            excluded.push_back({{"p", integer_to_json(e.p)}, {"reason", to_string(e.reason)}});
        j["excluded"] = std::move(excluded);
        json queries = json::array();
        for (const auto& m : cert.queries)
            queries.push_back(membership_json(m));
        j["membership"] = std::move(queries);
    }
    j["text"] = certificate_text(cert);
    return j;
}

// Validation

namespace {

enum class Kind { string, integer_string, number, boolean, array, object, interval, any };

bool is_integer_string(const json& v)
{
    if (!v.is_string())
        return false;
    const std::string& s = v.get_ref<const std::string&>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

bool has_kind(const json& v, Kind k)
{
    switch (k) {
    case Kind::string: return v.is_string();
    case Kind::integer_string: return is_integer_string(v);
    case Kind::number: return v.is_number();
    case Kind::boolean: return v.is_boolean();
    case Kind::array: return v.is_array();
    case Kind::object: return v.is_object();
    case Kind::interval:
        return v.is_object() && v.contains("mid") && v.contains("rad") && v["mid"].is_string()
               && v["rad"].is_string();
    case Kind::any: return true;
    }
    return false;
}

using Fields = std::vector<std::pair<std::string, Kind>>;

void require(const json& j, const Fields& fields, const std::string& where, std::vector<std::string>& problems)
{
    if (!j.is_object()) {
        problems.push_back(where + ": expected an object");
        return;
    }
    for (const auto& [key, kind] : fields) {
        if (!j.contains(key))
            problems.push_back(where + "." + key + ": missing");
        else if (!has_kind(j[key], kind))
            problems.push_back(where + "." + key + ": wrong type");
    }
}

void require_integer_array(const json& j, const std::string& key, const std::string& where,
                           std::vector<std::string>& problems)
{
    if (!j.contains(key) || !j[key].is_array()) {
        problems.push_back(where + "." + key + ": expected an array");
        return;
    }
    for (std::size_t i = 0; i < j[key].size(); ++i)
        if (!is_integer_string(j[key][i]))
            problems.push_back(where + "." + key + "[" + std::to_string(i) + "]: expected a decimal integer string");
}

void check_integer_summary(const json& j, const std::string& where, std::vector<std::string>& problems)
{
    require(j, {{"sign", Kind::number}, {"digits", Kind::number}}, where, problems);
    if (!j.is_object())
        return;
    if (j.contains("decimal")) {
        if (!is_integer_string(j["decimal"]))
            problems.push_back(where + ".decimal: expected a decimal integer string");
    } else {
        require(j, {{"leading", Kind::string}, {"trailing", Kind::string}, {"sha256", Kind::string}}, where,
                problems);
    }
}

const Fields kFieldSummary = {{"label", Kind::string},      {"degree", Kind::number},
                              {"discriminant", Kind::integer_string}, {"class_number", Kind::integer_string},
                              {"unit_rank", Kind::number},  {"regulator", Kind::interval},
                              {"ramified_primes", Kind::array}};

const Fields kConstants = {{"A1", Kind::string},        {"delta_k", Kind::string},   {"C1", Kind::interval},
                           {"C2", Kind::interval},      {"C2_is_one", Kind::boolean}, {"log10_a", Kind::interval},
                           {"log10_C", Kind::interval}, {"leading_digits_C", Kind::string}};

void check_exceptional(const json& j, std::vector<std::string>& p)
{
    require(j,
            {{"field", Kind::object},
             {"config", Kind::object},
             {"snew", Kind::array},
             {"exponent_vectors", Kind::number},
             {"weil_numbers", Kind::number},
             {"processed", Kind::number},
             {"zero_excluded", Kind::number},
             {"entries", Kind::array},
             {"conjugate_size_checks", Kind::array},
             {"conjugate_size_violations", Kind::number},
             {"entry_size_violations", Kind::number},
             {"constants", Kind::object}},
            "$", p);
    if (!p.empty())
        return;
    require(j["field"], kFieldSummary, "$.field", p);
    require(j["constants"], kConstants, "$.constants", p);
    require_integer_array(j, "T", "$", p);
    require_integer_array(j, "Ram", "$", p);
    for (const char* key : {"N0", "N1"})
        if (j.contains(key))
            require_integer_array(j, key, "$", p);
    for (std::size_t i = 0; i < j["snew"].size(); ++i) {
        const std::string where = "$.snew[" + std::to_string(i) + "]";
        require(j["snew"][i],
                {{"q", Kind::integer_string},
                 {"generator", Kind::array},
                 {"generator_norm", Kind::integer_string},
                 {"height_check", Kind::object},
                 {"meets_split_prime_bound", Kind::boolean}},
                where, p);
    }
    for (std::size_t i = 0; i < j["entries"].size(); ++i) {
        const std::string where = "$.entries[" + std::to_string(i) + "]";
        const json& e = j["entries"][i];
        require(e,
                {{"q", Kind::integer_string},
                 {"eps", Kind::object},
                 {"beta", Kind::object},
                 {"beta_in_k", Kind::boolean},
                 {"m", Kind::object},
                 {"factorization", Kind::object}},
                where, p);
        if (e.is_object() && e.contains("m"))
            check_integer_summary(e["m"], where + ".m", p);
    }
    if (j.contains("membership")) {
        for (std::size_t i = 0; i < j["membership"].size(); ++i)
            require(j["membership"][i],
                    {{"p", Kind::integer_string}, {"member", Kind::boolean}, {"sources", Kind::array}},
                    "$.membership[" + std::to_string(i) + "]", p);
    }
}

void check_certificate(const json& j, std::vector<std::string>& p)
{
    require(j,
            {{"field", Kind::object},
             {"quaternion", Kind::object},
             {"config", Kind::object},
             {"hypotheses", Kind::array},
             {"refused", Kind::boolean},
             {"refusals", Kind::array},
             {"admissible", Kind::object},
             {"quaternion_splits_over_k", Kind::boolean},
             {"branch", Kind::string},
             {"branch_statement", Kind::string},
             {"text", Kind::string}},
            "$", p);
    if (!p.empty())
        return;
    require(j["field"], kFieldSummary, "$.field", p);
    const std::string branch = j["branch"].get<std::string>();
    if (branch != "empty" && branch != "elliptic")
        p.push_back("$.branch: must be \"empty\" or \"elliptic\"");
    for (std::size_t i = 0; i < j["hypotheses"].size(); ++i)
        require(j["hypotheses"][i], {{"name", Kind::string}, {"status", Kind::string}, {"detail", Kind::string}},
                "$.hypotheses[" + std::to_string(i) + "]", p);
    if (j["refused"].get<bool>() == j["refusals"].empty())
        p.push_back("$.refused: disagrees with $.refusals");
    if (!j["refused"].get<bool>()) {
        require(j, {{"constants", Kind::object}, {"excluded", Kind::array}, {"membership", Kind::array}}, "$", p);
        require_integer_array(j, "N1", "$", p);
        if (j.contains("constants"))
            require(j["constants"], kConstants, "$.constants", p);
        if (j.contains("excluded"))
            for (std::size_t i = 0; i < j["excluded"].size(); ++i)
                require(j["excluded"][i], {{"p", Kind::integer_string}, {"reason", Kind::string}},
                        "$.excluded[" + std::to_string(i) + "]", p);
    }
}

void check_invariants(const json& j, std::vector<std::string>& p)
{
    require(j, {{"field", Kind::object}, {"config", Kind::object}}, "$", p);
    if (p.empty())
        require(j["field"], kFieldSummary, "$.field", p);
}

void check_weil(const json& j, std::vector<std::string>& p)
{
    require(j, {{"n", Kind::integer_string}, {"M", Kind::number}, {"traces", Kind::array}}, "$", p);
    if (!p.empty())
        return;
    for (std::size_t i = 0; i < j["traces"].size(); ++i)
        require(j["traces"][i], {{"a", Kind::integer_string}, {"roots", Kind::array}},
                "$.traces[" + std::to_string(i) + "]", p);
}

void check_bound(const json& j, std::vector<std::string>& p)
{
    require(j, {{"field", Kind::object}, {"config", Kind::object}, {"constants", Kind::object}}, "$", p);
    if (p.empty())
        require(j["constants"], kConstants, "$.constants", p);
}

void check_quaternion(const json& j, std::vector<std::string>& p)
{
    require(j, {{"d", Kind::integer_string}, {"config", Kind::object}}, "$", p);
    require_integer_array(j, "primes", "$", p);
}

}  // namespace

std::vector<std::string> validate_report(const json& report)
{
    std::vector<std::string> problems;
    if (!report.is_object() || !report.contains("schema") || !report["schema"].is_string())
        return {"$.schema: missing"};
    static const std::map<std::string, std::function<void(const json&, std::vector<std::string>&)>> checkers = {
        {kExceptionalSchema, check_exceptional}, {kCertificateSchema, check_certificate},
        {kInvariantsSchema, check_invariants},   {kWeilSchema, check_weil},
        {kBoundSchema, check_bound},             {kQuaternionSchema, check_quaternion}};
    const auto it = checkers.find(report["schema"].get<std::string>());
    if (it == checkers.end())
        return {"$.schema: unknown schema " + report["schema"].dump()};
    it->second(report, problems);
    return problems;
}

}  // namespace exbound
