#include "exbound/cli.hpp"

#include "exbound/card_io.hpp"
#include "exbound/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

namespace exbound::cli {

using nlohmann::json;

namespace {

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

mpz_class parse_integer(const std::string& text, const std::string& what)
{
    mpz_class x;
    if (text.empty() || x.set_str(text, 10) != 0)
        throw InputError(what + ": not an integer: '" + text + "'");
    return x;
}

// "40", "81/2" or "40.5".
mpq_class parse_rational(const std::string& text, const std::string& what)
{
    mpq_class x;
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        if (text.empty() || x.set_str(text, 10) != 0)
            throw InputError(what + ": not a rational number: '" + text + "'");
    } else {
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        mpz_class num;
        if (digits.empty() || num.set_str(digits, 10) != 0)
            throw InputError(what + ": not a decimal number: '" + text + "'");
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
        x = mpq_class(num, den);
    }
    x.canonicalize();
    return x;
}

struct FieldSource
{
    std::string quadratic;
    std::string card;
    CLI::Option* quadratic_opt = nullptr;
    CLI::Option* card_opt = nullptr;

    void attach(CLI::App* sub)
    {
        quadratic_opt = sub->add_option("--quadratic", quadratic, "Squarefree D: the field Q(sqrt(D))");
        card_opt = sub->add_option("--card", card, "Field card JSON file");
        quadratic_opt->excludes(card_opt);
    }
    bool given() const { return quadratic_opt->count() + card_opt->count() > 0; }
    std::string describe() const
    {
        return quadratic_opt->count() ? "quadratic:" + quadratic : "card:" + card;
    }
    FieldCard load() const
    {
        if (!given())
            throw InputError("a field is required: pass --quadratic D or --card PATH");
        if (quadratic_opt->count())
            return build_card(parse_integer(quadratic, "--quadratic"));
        return load_card(card);
    }
};

// Settings shared by exceptional, bound and certify. Values come from the
// defaults, then the config file, then explicit flags.
struct Tuning
{
    std::string A1 = "40";
    std::string delta = "card";
    std::uint64_t factor_units = FactorBudget::kDefaultUnits;
    std::uint32_t trial_limit = FactorBudget::kDefaultTrialLimit;
    long precision_cap = 16384;
    unsigned threads = 1;
    int enum_cap = 12;
    std::size_t digit_threshold = 10'000;
    bool full_digits = false;
    std::uint32_t list_limit = 1'000'000;
    std::string scan_limit = "1000000";
    bool best_effort = false;
    std::map<std::string, CLI::Option*> options;

    void attach(CLI::App* sub)
    {
        options["A1"] = sub->add_option("--A1", A1, "Constant A1 > 1 (integer, fraction or decimal)");
        options["delta"] = sub->add_option("--delta", delta, "delta_k policy: card, voutier, or a decimal value");
        options["factor_units"] = sub->add_option("--factor-units", factor_units, "Factoring effort budget")
                                      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
        options["trial_limit"] = sub->add_option("--trial-limit", trial_limit, "Trial-division prime limit")
                                     ->check(CLI::Range(std::uint32_t{2}, std::uint32_t{1'000'000'000}));
        options["precision_cap"] = sub->add_option("--precision-cap", precision_cap, "Interval precision cap in bits")
                                       ->check(CLI::Range(128L, 1L << 20));
        options["threads"] = sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));
        options["enum_cap"] = sub->add_option("--enum-cap", enum_cap, "Largest degree for which E(k) is enumerated")
                                  ->check(CLI::Range(1, 20));
        options["digit_threshold"] =
            sub->add_option("--digit-threshold", digit_threshold, "Integers with more digits are summarized")
                ->check(CLI::Range(std::size_t{100}, std::size_t{100'000'000}));
        options["full_digits"] = sub->add_flag("--full-digits", full_digits, "Print every integer in full");
        options["list_limit"] = sub->add_option("--list-limit", list_limit, "List N1 up to this bound")
                                    ->check(CLI::Range(std::uint32_t{2}, std::uint32_t{100'000'000}));
        options["scan_limit"] = sub->add_option("--scan-limit", scan_limit, "Split-prime scan limit");
        options["best_effort"] = sub->add_flag("--best-effort", best_effort, "Also try to factor every m");
    }

    void apply_file(const json& j)
    {
        for (const auto& [key, value] : j.items()) {
            if (options.count(key) == 0)
                throw InputError("config file: unknown key '" + key + "'");
            if (options[key]->count())
                continue;  // an explicit flag wins
            try {
                if (key == "A1" || key == "delta" || key == "scan_limit")
                    (key == "A1" ? A1 : key == "delta" ? delta : scan_limit) =
                        value.is_string() ? value.get<std::string>() : value.dump();
                else if (key == "factor_units") factor_units = value.get<std::uint64_t>();
                else if (key == "trial_limit") trial_limit = value.get<std::uint32_t>();
                else if (key == "precision_cap") precision_cap = value.get<long>();
                else if (key == "threads") threads = value.get<unsigned>();
                else if (key == "enum_cap") enum_cap = value.get<int>();
                else if (key == "digit_threshold") digit_threshold = value.get<std::size_t>();
                else if (key == "full_digits") full_digits = value.get<bool>();
                else if (key == "list_limit") list_limit = value.get<std::uint32_t>();
                else if (key == "best_effort") best_effort = value.get<bool>();
            } catch (const json::exception&) {
                throw InputError("config file: bad value for '" + key + "'");
            }
        }
    }

    ExceptionalConfig resolve(const FieldCard& card) const
    {
        ExceptionalConfig c;
        c.A1 = parse_rational(A1, "--A1");
        if (c.A1 <= 1)
            throw InputError("--A1 must be greater than 1");
        if (delta == "voutier") {
            c.delta_override = default_delta(card.degree);
        } else if (delta != "card") {
            const mpq_class d = parse_rational(delta, "--delta");
            if (d <= 0)
                throw InputError("--delta must be positive");
            c.delta_override = delta;
        }
        c.budget.units = factor_units;
        c.budget.trial_limit = trial_limit;
        c.precision.cap = precision_cap;
        c.threads = threads;
        c.enumeration_cap = enum_cap;
        c.digit_threshold = digit_threshold;
        c.full_digits = full_digits;
        c.list_limit = list_limit;
        c.best_effort = best_effort;
        c.snew_scan_limit = parse_integer(scan_limit, "--scan-limit");
        if (c.snew_scan_limit < 2)
            throw InputError("--scan-limit must be at least 2");
        if (card.degree > 27 && c.enumeration_cap > 27)
            c.enumeration_cap = 27;
        return c;
    }
};

json read_json_file(const std::string& path, const std::string& what)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(what + ": cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(what + ": " + path + " is not valid JSON: " + e.what());
    }
}

void emit(const json& report, const std::string& path, std::ostream& out)
{
    const std::string text = report.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw InputError("cannot write " + path);
    file << text;
}

json ring_json(const RingElement& x)
{
    json a = json::array();
    for (const auto& c : x.coords)
        a.push_back(integer_to_json(c));
    return a;
}

json ideal_json(const QuadIdeal& I)
{
    return {{"a", integer_to_json(I.a)}, {"b", integer_to_json(I.b)}, {"c", integer_to_json(I.c)}};
}

std::vector<mpz_class> parse_primes(const std::vector<std::string>& texts)
{
    std::vector<mpz_class> out;
    for (const auto& t : texts) {
        const mpz_class p = parse_integer(t, "--test-prime");
        if (p < 2 || !is_prime(p))
            throw InputError("--test-prime: " + t + " is not a prime");
        out.push_back(p);
    }
    return out;
}

json invariants_report(const FieldCard& card, const std::string& source)
{
    json j{{"schema", kInvariantsSchema},
           {"field", field_summary_json(card)},
           {"config", {{"source", source}}},
           {"galois_group_order", card.galois.size()},
           {"torsion_order", card.torsion_order},
           {"delta_k", card.delta_k}};
    json units = json::array();
    for (const auto& u : card.fundamental_units)
        units.push_back(ring_json(u));
    j["fundamental_units"] = std::move(units);
    if (card.is_quadratic()) {
        const ClassGroup G(card);
        json gens = json::array();
        for (const auto& g : G.generators())
            gens.push_back({{"prime", ideal_json(g.prime)}, {"order", g.order}});
        j["class_group"] = {{"order", G.order()}, {"invariants", G.invariants()}, {"generators", std::move(gens)}};
        j["contains_hilbert_class_field"] = hcf_containment_check(card);
    }
    return j;
}

json weil_report(const mpz_class& n, unsigned long M)
{
    json traces = json::array();
    const mpz_class n12 = [&] {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), 12);
        return r;
    }();
    json current;
    for (const auto& w : enumerate_FR(n)) {
        if (current.is_null() || current["a"] != integer_to_json(w.a)) {
            if (!current.is_null())
                traces.push_back(std::move(current));
            current = {{"a", integer_to_json(w.a)},
                       {"discriminant", integer_to_json(w.discriminant())},
                       {"power_trace", integer_to_json(power_trace(w, M))},
                       {"roots", json::array()}};
        }
        const WeilPowerCheck c = weil_power_check(w);
        json r{{"root", w.is_double_root() ? "double" : (w.root == RootChoice::upper ? "upper" : "lower")}};
        r["beta12"] = c.beta12 ? json(integer_to_json(*c.beta12)) : json(nullptr);
        r["beta24"] = c.beta24 ? json(integer_to_json(*c.beta24)) : json(nullptr);
        r["beta24_equals_n12"] = c.beta24 && *c.beta24 == n12;
        const auto [re, re_rad] = weil_value(w, 128).re.to_decimal(20);
        const auto [im, im_rad] = weil_value(w, 128).im.to_decimal(20);
        r["value"] = {{"re", re}, {"im", im}};
        current["roots"].push_back(std::move(r));
    }
    if (!current.is_null())
        traces.push_back(std::move(current));
    return {{"schema", kWeilSchema},
            {"n", integer_to_json(n)},
            {"M", M},
            {"config", {{"n", integer_to_json(n)}, {"M", M}}},
            {"traces", std::move(traces)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exceptional primes and Shimura-curve point certificates over Galois number fields", "exbound"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, std::string("JSON config file (default: $") + kConfigEnv + ")");

    FieldSource inv_field;
    std::string emit_card;
    std::string inv_output;
    CLI::App* inv = app.add_subcommand("invariants", "Field invariants, class group and units");
    inv_field.attach(inv);
    inv->add_option("--emit-card", emit_card, "Write the field card to this path");
    inv->add_option("--output", inv_output, "Report path (default: stdout)");

    std::string weil_n;
    unsigned long weil_M = 24;
    std::string weil_output;
    CLI::App* weil = app.add_subcommand("weil", "Quadratic Weil numbers FR(n) and their power traces");
    weil->add_option("--n", weil_n, "n >= 1")->required();
    weil->add_option("--M", weil_M, "Exponent for the power trace")->check(CLI::Range(0UL, 100'000UL));
    weil->add_option("--output", weil_output, "Report path (default: stdout)");

    FieldSource exc_field;
    Tuning exc_tuning;
    std::vector<std::string> exc_tests;
    std::string exc_output;
    CLI::App* exc = app.add_subcommand("exceptional", "The exceptional prime set N1(k)");
    exc_field.attach(exc);
    exc_tuning.attach(exc);
    exc->add_option("--test-prime", exc_tests, "Decide membership of this prime in N1(k) (repeatable)");
    exc->add_option("--output", exc_output, "Report path (default: stdout)");

    FieldSource bnd_field;
    Tuning bnd_tuning;
    std::string bnd_output;
    CLI::App* bnd = app.add_subcommand("bound", "The a-priori bound C(k, 2|d_k|^(A1 h_k)) and its constants");
    bnd_field.attach(bnd);
    bnd_tuning.attach(bnd);
    bnd->add_option("--output", bnd_output, "Report path (default: stdout)");

    FieldSource qua_field;
    std::string qua_disc;
    std::string qua_scan = "1000000";
    std::string qua_output;
    CLI::App* qua = app.add_subcommand("quaternion", "Local splitting of the quaternion algebra of discriminant d");
    qua_field.attach(qua);
    qua->add_option("--disc", qua_disc, "Discriminant d")->required();
    qua->add_option("--scan-limit", qua_scan, "Largest q tried in the admissible-prime search");
    qua->add_option("--output", qua_output, "Report path (default: stdout)");

    FieldSource cer_field;
    Tuning cer_tuning;
    std::string cer_disc;
    std::vector<std::string> cer_tests;
    std::string cer_output;
    std::string cer_text;
    CLI::App* cer = app.add_subcommand("certify", "Certificate for the points of M0^B(p) over k");
    cer_field.attach(cer);
    cer_tuning.attach(cer);
    cer->add_option("--disc", cer_disc, "Quaternion discriminant d")->required();
    cer->add_option("--test-prime", cer_tests, "Decide membership of this prime in N1(k) (repeatable)");
    cer->add_option("--output", cer_output, "Certificate JSON path (default: stdout)");
    cer->add_option("--text", cer_text, "Also write the text rendering to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return input_error;
    }

    try {
        if (config_path.empty())
            if (const char* env = std::getenv(kConfigEnv))
                config_path = env;
        const json file_config = config_path.empty() ? json::object() : read_json_file(config_path, "config");
        if (!file_config.is_object())
            throw InputError("config file must hold a JSON object");

        if (inv->parsed()) {
            const FieldCard card = inv_field.load();
            if (!emit_card.empty())
                save_card(card, emit_card);
            emit(invariants_report(card, inv_field.describe()), inv_output, out);
            if (!inv_output.empty())
                out << card.label << ": degree " << card.degree << ", d_k = " << card.discriminant
                    << ", h_k = " << card.class_number << ", regulator " << card.regulator.mid << "\n";
            return ok;
        }

        if (weil->parsed()) {
            const mpz_class n = parse_integer(weil_n, "--n");
            if (n < 1)
                throw InputError("--n must be at least 1");
            const json report = weil_report(n, weil_M);
            emit(report, weil_output, out);
            if (!weil_output.empty())
                for (const auto& t : report["traces"])
                    for (const auto& r : t["roots"])
                        if (r["beta24_equals_n12"].get<bool>())
                            out << "a = " << t["a"].get<std::string>() << " (" << r["root"].get<std::string>()
                                << "): beta^24 = n^12\n";
            return ok;
        }

        if (exc->parsed()) {
            const FieldCard card = exc_field.load();
            exc_tuning.apply_file(file_config);
            const ExceptionalConfig config = exc_tuning.resolve(card);
            const std::vector<mpz_class> tests = parse_primes(exc_tests);
            const ExceptionalRun result = run_exceptional(card, config);
            const PrimeListing listing = list_upto(result, config.list_limit);
            std::vector<MembershipResult> queries;
            for (const auto& p : tests)
                queries.push_back(membership(result, p));
            std::optional<BestEffortFactors> factors;
            if (config.best_effort)
                factors = best_effort_factor(result, config.budget);
            ReportExtras extras{&listing, &queries, factors ? &*factors : nullptr};
            emit(exceptional_report(card, result, config, extras), exc_output, out);
            if (!exc_output.empty()) {
                out << "S^new:";
                for (const auto& s : result.snew)
                    out << " " << s.q;
                out << "\nM2 integers: " << result.entries.size() << " nonzero, " << result.zero_excluded
                    << " zero excluded\nN1 up to " << listing.limit << ": " << listing.N1.size() << " primes\n";
            }
            for (const auto& m : queries) {
                std::string sources;
                for (const auto& s : m.sources)
                    sources += (sources.empty() ? "" : ",") + s;
                (exc_output.empty() ? err : out) << "p = " << m.p << ": member = " << (m.member ? "true" : "false")
                                                 << (sources.empty() ? "" : ", sources = " + sources) << "\n";
            }
            return ok;
        }

        if (bnd->parsed()) {
            const FieldCard card = bnd_field.load();
            bnd_tuning.apply_file(file_config);
            const ExceptionalConfig config = bnd_tuning.resolve(card);
            const BoundConstants c = bound_constants(card, config.A1, config.delta_for(card));
            const json report{{"schema", kBoundSchema},
                              {"field", field_summary_json(card)},
                              {"config", config_json(card, config)},
                              {"constants", constants_json(c)}};
            emit(report, bnd_output, out);
            if (!bnd_output.empty())
                out << "log10 C(k, a) = " << c.log10_C.to_decimal(15).first << "\n";
            return ok;
        }

        if (qua->parsed()) {
            const QuaternionDisc D = validate_disc(parse_integer(qua_disc, "--disc"));
            json report{{"schema", kQuaternionSchema},
                        {"d", integer_to_json(D.d)},
                        {"config", {{"disc", integer_to_json(D.d)}, {"scan_limit", qua_scan}}}};
            json primes = json::array();
            for (const auto& l : D.primes)
                primes.push_back(integer_to_json(l));
            report["primes"] = std::move(primes);
            if (qua_field.given()) {
                const FieldCard card = qua_field.load();
                report["config"]["source"] = qua_field.describe();
                report["field"] = field_summary_json(card);
                report["splits_over_k"] = splits_over_field(D, card);
                const AdmissibleSearch s = find_admissible_q(D, card, parse_integer(qua_scan, "--scan-limit"));
                report["admissible_q"] = s.q ? json(integer_to_json(*s.q)) : json(nullptr);
                report["threshold"] = s.q ? json(integer_to_json(s.threshold)) : json(nullptr);
                json rejected = json::array();
                for (const auto& r : s.rejected)
                    rejected.push_back(integer_to_json(r.q));
                report["rejected"] = std::move(rejected);
            }
            emit(report, qua_output, out);
            return ok;
        }

        if (cer->parsed()) {
            const FieldCard card = cer_field.load();
            const QuaternionDisc D = validate_disc(parse_integer(cer_disc, "--disc"));
            cer_tuning.apply_file(file_config);
            const ExceptionalConfig config = cer_tuning.resolve(card);
            const Certificate cert = certify(card, D, config, parse_primes(cer_tests));
            emit(certificate_json(cert, config), cer_output, out);
            const std::string text = certificate_text(cert);
            if (!cer_text.empty()) {
                std::ofstream t(cer_text);
                if (!t)
                    throw InputError("cannot write " + cer_text);
                t << text;
            }
            if (!cer_output.empty())
                out << text;
            return cert.refused() ? refused : ok;
        }
    } catch (const CardFormatError& e) {
        err << "malformed field card:\n";
        for (const auto& d : e.diagnostics())
            err << "  " << d << "\n";
        return input_error;
    } catch (const CardValidationError& e) {
        err << "invalid field card:\n";
        for (const auto& p : e.problems())
            err << "  " << p << "\n";
        return input_error;
    } catch (const EnumerationRefused& e) {
        err << "refused: " << e.what() << "\n";
        return refused;
    } catch (const SnewError& e) {
        err << "refused: " << e.what() << "\n";
        return refused;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

}  // namespace exbound::cli
