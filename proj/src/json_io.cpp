#include "concord/json_io.hpp"

#include "concord/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

namespace concord {

namespace {

mpz_class pow10(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

mpz_class parse_integer_text(std::string_view s, const std::string& context) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    if (i == s.size())
        throw validation_error(context + ": '" + std::string(s) + "' is not an integer");
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw validation_error(context + ": '" + std::string(s) + "' is not an integer");
    return mpz_class(std::string(s), 10);
}

} // namespace

mpq_class parse_rational(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty())
        throw validation_error("empty rational");

    if (size_t slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer_text(s.substr(0, slash), "rational numerator");
        mpz_class den = parse_integer_text(s.substr(slash + 1), "rational denominator");
        if (den == 0)
            throw validation_error("rational denominator is zero");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    long exp10 = 0;
    std::string_view mant = s;
    if (size_t ep = s.find_first_of("eE"); ep != std::string_view::npos) {
        std::string_view es = s.substr(ep + 1);
        mant = s.substr(0, ep);
        const char* first = es.data();
        const char* last = es.data() + es.size();
        if (first != last && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, exp10);
        if (ec != std::errc() || ptr != last)
            throw validation_error("'" + std::string(s) + "' has a malformed exponent");
    }

    bool neg = false;
    size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
        neg = mant[i] == '-';
        ++i;
    }
    std::string digits;
    long frac = 0;
    bool dot = false, any = false;
    for (; i < mant.size(); ++i) {
        if (mant[i] == '.') {
            if (dot)
                throw validation_error("'" + std::string(s) + "' is not a rational");
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(mant[i]))) {
            digits += mant[i];
            any = true;
            if (dot)
                ++frac;
        } else {
            throw validation_error("'" + std::string(s) + "' is not a rational");
        }
    }
    if (!any)
        throw validation_error("'" + std::string(s) + "' is not a rational");

    mpz_class num(digits.empty() ? "0" : digits, 10);
    if (neg)
        num = -num;
    mpz_class den = 1;
    long net = exp10 - frac;
    if (net >= 0)
        num *= pow10(net);
    else
        den = pow10(-net);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string integer_str(const mpz_class& z) { return z.get_str(); }

namespace {

using nlohmann::ordered_json;

ordered_json json_int(const mpz_class& z) {
    if (z.fits_slong_p())
        return ordered_json(z.get_si());
    return ordered_json(z.get_str());
}

const nlohmann::json& need(const nlohmann::json& j, const char* key,
                           const std::string& context) {
    if (!j.is_object() || !j.contains(key))
        throw validation_error(context + ": missing field '" + key + "'");
    return j.at(key);
}

mpz_class as_integer(const nlohmann::json& j, const std::string& context) {
    if (j.is_number_integer())
        return mpz_class(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return parse_integer_text(j.get<std::string>(), context);
    throw validation_error(context + ": expected an integer");
}

mpq_class as_rational(const nlohmann::json& j, const std::string& context) {
    if (j.is_number_integer())
        return mpq_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const validation_error& e) {
            throw validation_error(context + ": " + e.what());
        }
    }
    throw validation_error(context + ": expected a rational as a string");
}

int as_small_int(const nlohmann::json& j, const std::string& context) {
    if (!j.is_number_integer())
        throw validation_error(context + ": expected an integer");
    return j.get<int>();
}

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error(path + ": cannot open file");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

} // namespace

nlohmann::ordered_json matrix_to_json(const SeifertMatrix& v) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < v.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < v.size(); ++j)
            row.push_back(json_int(v.at(i, j)));
        rows.push_back(std::move(row));
    }
    ordered_json out;
    out["genus"] = v.genus();
    out["matrix"] = std::move(rows);
    return out;
}

SeifertMatrix matrix_from_json(const nlohmann::json& j, const std::string& context) {
    const nlohmann::json& rows = need(j, "matrix", context);
    if (!rows.is_array())
        throw validation_error(context + ".matrix: expected an array of rows");
    IntMat m;
    for (size_t i = 0; i < rows.size(); ++i) {
        const nlohmann::json& row = rows[i];
        const std::string rc = context + ".matrix[" + std::to_string(i) + "]";
        if (!row.is_array())
            throw validation_error(rc + ": expected an array");
        if (row.size() != rows.size())
            throw validation_error(rc + ": has " + std::to_string(row.size()) +
                                   " entries, expected " + std::to_string(rows.size()));
        std::vector<mpz_class> out;
        for (size_t k = 0; k < row.size(); ++k)
            out.push_back(as_integer(row[k], rc + "[" + std::to_string(k) + "]"));
        m.push_back(std::move(out));
    }
    SeifertMatrix v = [&] {
        try {
            return SeifertMatrix(std::move(m));
        } catch (const validation_error& e) {
            throw validation_error(context + ".matrix: " + e.what());
        }
    }();
    const mpz_class genus = as_integer(need(j, "genus", context), context + ".genus");
    if (genus != v.genus())
        throw validation_error(context + ".genus: expected " + std::to_string(v.genus()) +
                               " for a " + std::to_string(v.size()) + "x" +
                               std::to_string(v.size()) + " matrix");
    return v;
}

SeifertMatrix load_matrix(const std::string& path) {
    return matrix_from_json(parse_file(path), path);
}

nlohmann::ordered_json poly_to_json(const AlexanderPolynomial& a) {
    ordered_json coeffs = ordered_json::array();
    for (const mpz_class& c : a.poly().coeffs())
        coeffs.push_back(json_int(c));
    ordered_json out;
    out["coefficients"] = std::move(coeffs);
    return out;
}

nlohmann::ordered_json angle_to_json(const ProfileAngle& a) {
    ordered_json out;
    out["exact"] = a.exact;
    out["value"] = rational_str(a.value);
    if (!a.exact) {
        out["lo"] = rational_str(a.lo);
        out["hi"] = rational_str(a.hi);
    }
    return out;
}

nlohmann::ordered_json profile_to_json(const SignatureProfile& p) {
    ordered_json jumps = ordered_json::array();
    for (const ProfileJump& j : p.jumps) {
        ordered_json jj;
        jj["angle"] = angle_to_json(j.angle);
        jj["root_of_unity"] = j.root_of_unity;
        jumps.push_back(std::move(jj));
    }
    ordered_json arcs = ordered_json::array();
    for (const ProfileArc& a : p.arcs) {
        ordered_json aj;
        aj["start"] = angle_to_json(a.start);
        aj["end"] = angle_to_json(a.end);
        aj["signature"] = a.signature;
        arcs.push_back(std::move(aj));
    }
    ordered_json out;
    out["genus"] = p.genus;
    out["all_exact"] = p.all_exact;
    out["jumps"] = std::move(jumps);
    out["arcs"] = std::move(arcs);
    return out;
}

std::string profile_to_csv(const SignatureProfile& p) {
    std::string out = "angle_start,angle_end,signature\n";
    for (const ProfileArc& a : p.arcs) {
        out += rational_str(a.start.value);
        out += ',';
        out += rational_str(a.end.value);
        out += ',';
        out += std::to_string(a.signature);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json rho_to_json(const RhoValue& r) {
    ordered_json out;
    out["exact"] = r.exact;
    out["value"] = rational_str(r.value);
    if (!r.exact) {
        out["lo"] = rational_str(r.lo);
        out["hi"] = rational_str(r.hi);
    }
    return out;
}

nlohmann::ordered_json tuple_to_json(const Tuple& t) {
    ordered_json words = ordered_json::array();
    for (const Word& w : t.words)
        words.push_back(w.str());
    ordered_json steps = ordered_json::array();
    for (const auto& level : t.pedigree.steps) {
        ordered_json ls = ordered_json::array();
        for (const ChoiceStep& c : level) {
            ordered_json cj;
            cj["conjugated"] = c.conjugated;
            cj["index"] = c.index;
            ls.push_back(std::move(cj));
        }
        steps.push_back(std::move(ls));
    }
    ordered_json pedigree;
    pedigree["base_index"] = t.pedigree.base_index;
    pedigree["steps"] = std::move(steps);
    ordered_json out;
    out["genus"] = t.genus;
    out["level"] = t.level;
    out["words"] = std::move(words);
    out["pedigree"] = std::move(pedigree);
    return out;
}

nlohmann::ordered_json special_to_json(const SpecialResult& r) {
    ordered_json choices = ordered_json::array();
    for (const SpecialChoice& c : r.certificate.choices) {
        ordered_json cj;
        cj["level"] = c.level;
        cj["slot"] = c.slot;
        cj["conjugation"] = c.conjugation;
        cj["other"] = c.other;
        cj["factor"] = c.factor.str();
        choices.push_back(std::move(cj));
    }
    ordered_json cert;
    cert["pivot"] = r.certificate.pivot;
    cert["permutation"] = r.certificate.permutation;
    cert["choices"] = std::move(choices);
    ordered_json out;
    out["tuple"] = tuple_to_json(r.tuple);
    out["certificate"] = std::move(cert);
    return out;
}

nlohmann::ordered_json plan_to_json(const FamilyPlan& p) {
    ordered_json schedule = ordered_json::array();
    for (const ScheduleStep& s : p.schedule) {
        ordered_json sj;
        sj["index"] = s.index;
        sj["copies"] = integer_str(s.copies);
        sj["rho"] = rational_str(s.rho);
        sj["threshold"] = rational_str(s.threshold);
        schedule.push_back(std::move(sj));
    }
    ordered_json out;
    out["base"] = matrix_to_json(p.base);
    out["level"] = p.level;
    out["axes"] = p.axes;
    out["cm"] = rational_str(p.cm);
    out["infection"] = matrix_to_json(p.infection);
    out["infection_rho"] = rational_str(p.infection_rho);
    out["annotation"] = p.annotation;
    out["schedule"] = std::move(schedule);
    return out;
}

FamilyPlan plan_from_json(const nlohmann::json& j) {
    FamilyPlan p;
    p.base = matrix_from_json(need(j, "base", "plan"), "plan.base");
    p.level = as_small_int(need(j, "level", "plan"), "plan.level");
    p.axes = as_small_int(need(j, "axes", "plan"), "plan.axes");
    p.cm = as_rational(need(j, "cm", "plan"), "plan.cm");
    if (p.level < 1)
        throw validation_error("plan.level: must be at least 1");
    if (p.axes < 1)
        throw validation_error("plan.axes: must be at least 1");
    if (p.cm <= 0)
        throw validation_error("plan.cm: must be positive");
    p.infection = matrix_from_json(need(j, "infection", "plan"), "plan.infection");
    p.infection_rho = as_rational(need(j, "infection_rho", "plan"), "plan.infection_rho");
    if (j.contains("annotation") && j.at("annotation").is_string())
        p.annotation = j.at("annotation").get<std::string>();
    const nlohmann::json& schedule = need(j, "schedule", "plan");
    if (!schedule.is_array())
        throw validation_error("plan.schedule: expected an array");
    for (size_t i = 0; i < schedule.size(); ++i) {
        const std::string sc = "plan.schedule[" + std::to_string(i) + "]";
        const nlohmann::json& sj = schedule[i];
        ScheduleStep step;
        step.index = as_small_int(need(sj, "index", sc), sc + ".index");
        step.copies = as_integer(need(sj, "copies", sc), sc + ".copies");
        step.rho = as_rational(need(sj, "rho", sc), sc + ".rho");
        step.threshold = as_rational(need(sj, "threshold", sc), sc + ".threshold");
        if (step.index != static_cast<int>(i) + 1)
            throw validation_error(sc + ".index: steps must be numbered 1,2,... in order");
        if (step.copies < 1)
            throw validation_error(sc + ".copies: must be positive");
        p.schedule.push_back(std::move(step));
    }
    return p;
}

FamilyPlan load_plan(const std::string& path) {
    try {
        return plan_from_json(parse_file(path));
    } catch (const validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

nlohmann::ordered_json report_to_json(const VerifyReport& r) {
    ordered_json steps = ordered_json::array();
    for (const StepReport& s : r.steps) {
        ordered_json sj;
        sj["index"] = s.index;
        sj["arf_ok"] = s.arf_ok;
        sj["inequality_ok"] = s.inequality_ok;
        sj["recorded_ok"] = s.recorded_ok;
        sj["rho"] = rational_str(s.rho);
        sj["threshold"] = rational_str(s.threshold);
        sj["method"] = s.method;
        steps.push_back(std::move(sj));
    }
    ordered_json out;
    out["pass"] = r.pass;
    out["gate_ok"] = r.gate_ok;
    out["infection_ok"] = r.infection_ok;
    out["steps"] = std::move(steps);
    return out;
}

nlohmann::ordered_json gap_to_json(const GapResult& g) {
    ordered_json out;
    out["value"] = rational_str(g.value);
    out["threshold"] = rational_str(g.threshold);
    out["exceeds"] = g.exceeds;
    return out;
}

} // namespace concord
