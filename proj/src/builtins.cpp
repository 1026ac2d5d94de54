#include "trico/builtins.hpp"

#include "trico/coverfile.hpp"
#include "trico/errors.hpp"

#include <sstream>

namespace trico {

namespace {

const char* kTextN = R"(# cubic cover data over the heavy weight preset
form = cubic_rs
preset = N
r = "36*u^3-45*u^2+18*u-3+3*t^10-3*t^9+3*t^8"
s = "-27*u^5+135*u^4-144*u^3+72*u^2-18*u+2"
)";

const char* kTextM1 = R"(# galois example with smooth total space
form = general_abcd
preset = Mi
galois = true
a = "0"
b = "1"
c = "u^4+t^12+1"
d = "0"
)";

const char* kTextM2 = R"(# the branch curve acquires a triple point with an infinitely near triple point
form = cubic_3dc
preset = Mi
d = "(1+t^2)*u^2+2*u-t^8+t^7-t^6-1"
c = "-2*u^4-2*u^3+6*u-2"
)";

const char* kTextM3 = R"(# the branch curve acquires an ordinary quadruple point
form = cubic_3dc
preset = Mi
d = "2*u^2+4*u+t^4-1"
c = "-2*u^4-20*u^3-6*u^2+12*u+2*t^12-2*t^11-2"
)";

const char* kTextM4PinZ = R"(# galois example with an ordinary triple point on the branch curve
form = general_abcd
preset = Mi
galois = true
a = "0"
b = "1"
c = "u^4+u^3-t^2*u+t^12"
d = "0"
)";

const char* kTextM4PnotinZ = R"(# non-galois example over the second weight preset; b vanishes along a curve
form = general_abcd
preset = Mii
a = "0"
b = "u+1"
c = "2*u^3+t"
d = "u^2+t+t^7"
)";

// published expansion of the branch discriminant of the heavy preset example
const char* kDiscN =
    "19683*u^10-10206*u^9+2187*u^8"
    "+(46656*t^10-46656*t^9+46656*t^8)*u^6"
    "+(-116640*t^10+116640*t^9-116640*t^8)*u^5"
    "+(119556*t^10-119556*t^9+119556*t^8)*u^4"
    "+(3888*t^20-7776*t^19+11664*t^18-7776*t^17+3888*t^16-66096*t^10+66096*t^9-66096*t^8)*u^3"
    "+(-4860*t^20+9720*t^19-14580*t^18+9720*t^17-4860*t^16+21384*t^10-21384*t^9+21384*t^8)*u^2"
    "+(1944*t^20-3888*t^19+5832*t^18-3888*t^17+1944*t^16-3888*t^10+3888*t^9-3888*t^8)*u"
    "+108*t^30-324*t^29+648*t^28-756*t^27+648*t^26-324*t^25+108*t^24"
    "-324*t^20+648*t^19-972*t^18+648*t^17-324*t^16+324*t^10-324*t^9+324*t^8";

PlanePoint origin() { return {{"t", Rational(0)}, {"u", Rational(0)}}; }

CoverSpec load(const std::string& name, unsigned long long budget) {
    CoverSpec spec = normalize_to_v0(parse_cover_file(builtin_case(name).text));
    spec.spair_budget = budget;
    return spec;
}

Ideal jacobian_ideal_V0(const CoverSpec& spec) {
    CubicModel cubic = reduce_to_cubic(spec);
    std::vector<std::string> vars{"z", "u", "t"};
    MultiPoly z = poly_var(vars, "z");
    MultiPoly F = pow(z, 3) + embed(cubic.r, vars) * z + embed(cubic.s, vars);
    return Ideal{vars,
                 {F, differentiate(F, "z"), differentiate(F, "u"), differentiate(F, "t")}};
}

struct Harness {
    std::vector<AppendixCheck> out;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, pass ? "" : detail});
    }

    void check_poly(const std::string& name, const MultiPoly& got, const std::string& expected_text,
                    const std::vector<std::string>& vars) {
        MultiPoly expected = parse_poly(expected_text, vars);
        if (got == expected) add(name, true);
        else add(name, false, "got " + to_string(got));
    }

    void check_basis(const std::string& name, const GroebnerBasis& G,
                     const std::vector<std::string>& expected) {
        if (G.polys.size() != expected.size()) {
            add(name, false,
                "basis has " + std::to_string(G.polys.size()) + " elements, expected " +
                    std::to_string(expected.size()));
            return;
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (G.polys[i] != parse_poly(expected[i], G.vars)) {
                add(name, false,
                    "element " + std::to_string(i) + " is " + to_string(G.polys[i]) +
                        ", expected " + expected[i]);
                return;
            }
        }
        add(name, true);
    }

    void check_type(const std::string& name, const BranchPointClass& got, SingularityType type,
                    unsigned multiplicity) {
        bool ok = got.type == type && got.multiplicity == multiplicity;
        std::ostringstream detail;
        detail << "got " << to_string(got.type) << " of multiplicity " << got.multiplicity;
        add(name, ok, detail.str());
    }
};

}  // namespace

const std::vector<BuiltinCase>& builtin_cases() {
    static const std::vector<BuiltinCase> cases = {
        {"M1", kTextM1, CaseLabel::M1},
        {"M2", kTextM2, CaseLabel::M2},
        {"M3", kTextM3, CaseLabel::M3},
        {"M4_PinZ", kTextM4PinZ, CaseLabel::M4_PinZ},
        {"M4_PnotinZ", kTextM4PnotinZ, CaseLabel::M4_PnotinZ},
        {"N", kTextN, CaseLabel::N},
    };
    return cases;
}

const BuiltinCase& builtin_case(const std::string& name) {
    for (const auto& c : builtin_cases())
        if (c.name == name) return c;
    throw ValidationError("no builtin example named '" + name + "'");
}

std::vector<AppendixCheck> run_appendix_checks(unsigned long long spair_budget) {
    Harness h;
    GroebnerOptions lex{MonomialOrder::Lex, spair_budget};
    std::vector<std::string> sv{"s", "v"};

    {
        CoverSpec spec = load("N", spair_budget);
        MultiPoly D = branch_discriminant(spec);
        h.check_poly("discriminant-N-expansion", D, kDiscN, {"t", "u"});
        h.add("discriminant-N-multiplicity", multiplicity_at(D, origin()) == 8,
              "multiplicity " + std::to_string(multiplicity_at(D, origin())));
        h.check_poly("discriminant-N-lowest-form", lowest_form(D, origin()),
                     "324*t^8+2187*u^8", {"t", "u"});
        h.check_poly("transition-N-r",
                     transition(Section{{4, 10}, Chart::V0, spec.sections.at("r")}).poly,
                     "36*s*v^3-45*s^4*v^2+18*s^7*v-3*s^10+3-3*s+3*s^2", sv);
        h.check_poly("transition-N-s",
                     transition(Section{{6, 15}, Chart::V0, spec.sections.at("s")}).poly,
                     "-27*v^5+135*s^3*v^4-144*s^6*v^3+72*s^9*v^2-18*s^12*v+2*s^15", sv);
        h.check_basis("jacobian-N-basis", groebner(jacobian_ideal_V0(spec), lex),
                      {"9*u^6-9*u^5-9*u^4-6*u^3-6*u^2+6*u+2*z-2", "u^7", "t^7"});
        h.check_type("branch-type-N", classify_branch_point(D, origin()),
                     SingularityType::Ordinary, 8);
        h.add("infinity-N", check_smooth_over_infinity(spec), "certificate failed");
    }

    {
        CoverSpec spec = load("M2", spair_budget);
        MultiPoly D = branch_discriminant(spec);
        h.check_poly("transition-M2-d",
                     transition(Section{{3, 8}, Chart::V0, spec.sections.at("d")}).poly,
                     "(s^2+1)*v^2+2*s^5*v-1+s-s^2-s^8", sv);
        h.check_poly("transition-M2-c",
                     transition(Section{{4, 12}, Chart::V0, spec.sections.at("c")}).poly,
                     "-2*v^4-2*s^3*v^3+6*s^9*v-2*s^12", sv);
        h.check_basis("jacobian-M2-basis", groebner(jacobian_ideal_V0(spec), lex),
                      {"-2*t^6+t^2*u+u+z-1", "6*t^6-t^2*u+u^2", "7*t^6-6*t^5+2*t^3*u", "t^7"});
        h.check_poly("tangent-cone-M2", lowest_form(D, origin()), "-8*u^3", {"t", "u"});
        h.check_type("branch-type-M2", classify_branch_point(D, origin()),
                     SingularityType::TripleTriple, 3);
        h.add("infinity-M2", check_smooth_over_infinity(spec), "certificate failed");
    }

    {
        CoverSpec spec = load("M3", spair_budget);
        MultiPoly D = branch_discriminant(spec);
        h.check_poly("transition-M3-d",
                     transition(Section{{3, 8}, Chart::V0, spec.sections.at("d")}).poly,
                     "2*s^2*v^2+4*s^5*v+s^4-s^8", sv);
        h.check_poly("transition-M3-c",
                     transition(Section{{4, 12}, Chart::V0, spec.sections.at("c")}).poly,
                     "-2*v^4-20*s^3*v^3-6*s^6*v^2+12*s^9*v+2-2*s-2*s^12", sv);
        h.check_basis("jacobian-M3-basis", groebner(jacobian_ideal_V0(spec), lex),
                      {"3*u^2+2*u+z-1", "u^3", "t^3"});
        h.check_poly("tangent-cone-M3", lowest_form(D, origin()), "12*t^4-100*u^4", {"t", "u"});
        h.check_type("branch-type-M3", classify_branch_point(D, origin()),
                     SingularityType::Ordinary, 4);
        h.add("infinity-M3", check_smooth_over_infinity(spec), "certificate failed");
    }

    {
        CoverSpec spec = load("M1", spair_budget);
        h.check_basis("jacobian-M1-basis", groebner(jacobian_ideal_V0(spec), lex), {"1"});
        h.add("infinity-M1", check_smooth_over_infinity(spec), "certificate failed");
    }

    {
        CoverSpec spec = load("M4_PinZ", spair_budget);
        h.check_basis("jacobian-M4-basis", groebner(jacobian_ideal_V0(spec), lex),
                      {"z^2", "3*u^2-t^2", "t*u", "t^3"});
        h.check_type("branch-type-M4", classify_branch_point(spec.sections.at("c"), origin()),
                     SingularityType::Ordinary, 3);
        h.add("infinity-M4", check_smooth_over_infinity(spec), "certificate failed");
    }

    {
        CoverSpec spec = load("M4_PnotinZ", spair_budget);
        h.add("charts-M4-PnotinZ",
              general_smooth_V0(spec) && check_smooth_over_infinity(spec),
              "certificate failed");
    }

    return h.out;
}

}  // namespace trico
