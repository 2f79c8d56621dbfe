#include "magnitude/text.hpp"

#include <cctype>

#include "magnitude/power.hpp"

namespace magnitude {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool strip_call(std::string_view& s, std::string_view name) {
    if (s.size() < name.size() + 2 || s.substr(0, name.size()) != name) return false;
    std::string_view rest = trim(s.substr(name.size()));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return false;
    s = trim(rest.substr(1, rest.size() - 2));
    return true;
}

PosReal parse_real(std::string_view text) {
    std::string_view body = text;
    if (strip_call(body, "sqrt")) return relabel(real_root_of_rat(rat_parse(body), Nat(2)), std::string(text));
    if (strip_call(body, "root")) {
        auto comma = body.find(',');
        if (comma == std::string_view::npos) fail(ErrorKind::parse, "expected root(q,n), got " + std::string(text));
        PosRat q = rat_parse(trim(body.substr(0, comma)));
        Nat n = nat_make(trim(body.substr(comma + 1)));
        return relabel(real_root_of_rat(q, n), std::string(text));
    }
    return real_from_rat(rat_parse(body));
}

// 10^-d <= (7/4) 2^-p: enough digits that rounding stays inside the slack of p + 3.
unsigned decimal_digits(unsigned p) {
    mpz_class lhs = mpz_class(4) << p;
    mpz_class rhs = 7;
    unsigned d = 0;
    while (rhs < lhs) {
        rhs *= 10;
        ++d;
    }
    return d;
}

std::string decimal(const mpq_class& v, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpq_class scaled = v * scale + mpq_class(1, 2);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    std::string s = n.get_str();
    if (digits == 0) return s;
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return s;
}

} // namespace

Element parse_element(ModelId model, std::string_view text) {
    text = trim(text);
    switch (model) {
    case ModelId::nat: return nat_make(text);
    case ModelId::rat: return rat_parse(text);
    case ModelId::real: break;
    }
    return parse_real(text);
}

std::string format_real(const PosReal& x, unsigned p) {
    if (x.exact()) return x.exact()->to_string();
    Interval iv = x.approx(p + 3);
    return decimal(iv.midpoint(), decimal_digits(p)) + " ± 2^-" + std::to_string(p);
}

std::string format_element(const Element& e, unsigned p) {
    if (e.model() == ModelId::real) return format_real(e.as_real(), p);
    return e.to_string();
}

nlohmann::json real_to_json(const PosReal& x, unsigned p) {
    Interval iv = x.approx(p);
    return {{"mid", format_real(x, p)},
            {"precision", p},
            {"lo", iv.lo().to_string()},
            {"hi", iv.hi().to_string()}};
}

nlohmann::json element_to_json(const Element& e, unsigned p) {
    nlohmann::json j = {{"model", std::string(to_string(e.model()))}};
    if (e.model() == ModelId::real) {
        j["value"] = real_to_json(e.as_real(), p);
    } else {
        j["value"] = e.to_string();
    }
    return j;
}

} // namespace magnitude
