#include "trico/cover.hpp"

#include <algorithm>

namespace trico {

std::string to_string(Preset p) {
    switch (p) {
        case Preset::Mi: return "Mi";
        case Preset::Mii: return "Mii";
        case Preset::N: return "N";
    }
    return "?";
}

std::string to_string(Form f) {
    switch (f) {
        case Form::GeneralABCD: return "general_abcd";
        case Form::CubicRS: return "cubic_rs";
        case Form::Cubic3DC: return "cubic_3dc";
    }
    return "?";
}

std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::M1: return "M1";
        case CaseLabel::M2: return "M2";
        case CaseLabel::M3: return "M3";
        case CaseLabel::M4_PinZ: return "M4_PinZ";
        case CaseLabel::M4_PnotinZ: return "M4_PnotinZ";
        case CaseLabel::N: return "N";
        case CaseLabel::Unclassified: return "Unclassified";
    }
    return "?";
}

std::string to_string(SingularityType s) {
    switch (s) {
        case SingularityType::Ordinary: return "Ordinary";
        case SingularityType::TripleTriple: return "TripleTriple";
        case SingularityType::Other: return "Other";
    }
    return "?";
}

PresetInfo preset_info(Preset p) {
    switch (p) {
        case Preset::Mi: return {{2, 4}, {3, 8}};
        case Preset::Mii: return {{2, 5}, {3, 7}};
        case Preset::N: return {{2, 5}, {4, 10}};
    }
    throw ValidationError("unknown preset");
}

std::map<std::string, DivisorClass> section_weights(Form f, Preset p) {
    PresetInfo pi = preset_info(p);
    if (f == Form::GeneralABCD && (p == Preset::Mi || p == Preset::Mii))
        return {{"a", pi.L1},
                {"b", 2 * pi.L1 - pi.L2},
                {"c", 2 * pi.L2 - pi.L1},
                {"d", pi.L2}};
    if (f == Form::CubicRS && p == Preset::N) return {{"r", 2 * pi.L1}, {"s", 3 * pi.L1}};
    if (f == Form::Cubic3DC && p == Preset::Mi)
        return {{"d", pi.L2}, {"c", 2 * pi.L2 - pi.L1}};
    throw ValidationError("unsupported form/preset combination " + to_string(f) + "/" +
                          to_string(p));
}

namespace {

const MultiPoly& sec(const CoverSpec& spec, const std::string& name) {
    auto it = spec.sections.find(name);
    if (it == spec.sections.end()) throw ValidationError("missing section '" + name + "'");
    return it->second;
}

// true when the cover carries a global cubic model on the charts
bool cubic_path(const CoverSpec& spec) {
    return spec.form != Form::GeneralABCD || sec(spec, "b").is_constant();
}

// coefficients of the cubic z^3 + p z + q satisfied by z, as V0 polynomials
std::pair<MultiPoly, MultiPoly> cubic_pq(const CoverSpec& spec) {
    if (spec.form == Form::CubicRS) return {sec(spec, "r"), sec(spec, "s")};
    if (spec.form == Form::Cubic3DC)
        return {Rational(3) * sec(spec, "d"), -sec(spec, "c")};
    const MultiPoly &a = sec(spec, "a"), &b = sec(spec, "b"), &c = sec(spec, "c"),
                    &d = sec(spec, "d");
    MultiPoly p = Rational(3) * (b * d - a * a);
    MultiPoly q = -(Rational(2) * (a * a * a) - Rational(3) * (a * b * d) + b * b * c);
    return {p, q};
}

TripleCoverEquations make_equations(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                                    const MultiPoly& d, const std::vector<std::string>& ring) {
    MultiPoly az = embed(a, ring), bz = embed(b, ring), cz = embed(c, ring), dz = embed(d, ring);
    MultiPoly z = poly_var(ring, "z"), w = poly_var(ring, "w");
    MultiPoly A = Rational(2) * (az * az - bz * dz);
    MultiPoly B = az * dz - bz * cz;
    MultiPoly C = Rational(2) * (dz * dz - az * cz);
    TripleCoverEquations eq;
    eq.g1 = z * z - az * z - bz * w - A;
    eq.g2 = z * w + dz * z + az * w + B;
    eq.g3 = w * w - cz * z - dz * w - C;
    return eq;
}

// all 2x2 minors of the Jacobian of (g1, g2, g3) in the listed directions
std::vector<MultiPoly> jacobian_minors(const TripleCoverEquations& eq,
                                       const std::vector<std::string>& dirs) {
    std::vector<MultiPoly> rows[3];
    const MultiPoly* gs[3] = {&eq.g1, &eq.g2, &eq.g3};
    for (int i = 0; i < 3; ++i)
        for (const auto& v : dirs) rows[i].push_back(differentiate(*gs[i], v));
    std::vector<MultiPoly> out;
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
            for (std::size_t c1 = 0; c1 < dirs.size(); ++c1)
                for (std::size_t c2 = c1 + 1; c2 < dirs.size(); ++c2)
                    out.push_back(rows[r1][c1] * rows[r2][c2] - rows[r1][c2] * rows[r2][c1]);
    return out;
}

MultiPoly transitioned(const MultiPoly& p, DivisorClass cls) {
    return transition(Section{cls, Chart::V0, p}).poly;
}

}  // namespace

void validate_cover(const CoverSpec& spec) {
    auto weights = section_weights(spec.form, spec.preset);
    for (const auto& [name, cls] : weights) {
        auto it = spec.sections.find(name);
        if (it == spec.sections.end()) throw ValidationError("missing section '" + name + "'");
        validate_section({cls, Chart::V0, it->second});
    }
    for (const auto& [name, poly] : spec.sections)
        if (!weights.count(name)) throw ValidationError("unexpected section '" + name + "'");
    if (spec.galois) {
        if (spec.form != Form::GeneralABCD)
            throw ValidationError("galois covers need the general form");
        if (!sec(spec, "a").is_zero() || !sec(spec, "d").is_zero())
            throw ValidationError("galois covers need a = d = 0");
    }
    if (spec.form == Form::GeneralABCD && sec(spec, "b").is_zero())
        throw ValidationError("section b must not vanish identically");
}

TripleCoverEquations build_general_equations(const CoverSpec& spec) {
    if (spec.form != Form::GeneralABCD)
        throw ValidationError("the quadric relations need the general form");
    validate_cover(spec);
    return make_equations(sec(spec, "a"), sec(spec, "b"), sec(spec, "c"), sec(spec, "d"),
                          {"z", "w", "t", "u"});
}

CubicModel reduce_to_cubic(const CoverSpec& spec) {
    validate_cover(spec);
    if (spec.form == Form::GeneralABCD && !sec(spec, "b").is_constant())
        throw ValidationError("the cubic model needs a constant b");
    auto [p, q] = cubic_pq(spec);
    return {p, q};
}

MultiPoly branch_discriminant(const CoverSpec& spec) {
    validate_cover(spec);
    MultiPoly D;
    if (spec.form == Form::CubicRS) {
        const MultiPoly &r = sec(spec, "r"), &s = sec(spec, "s");
        D = Rational(4) * (r * r * r) + Rational(27) * (s * s);
    } else if (spec.form == Form::Cubic3DC) {
        const MultiPoly &d = sec(spec, "d"), &c = sec(spec, "c");
        D = Rational(4) * (d * d * d) + c * c;
    } else {
        auto [p, q] = cubic_pq(spec);
        const MultiPoly& b = sec(spec, "b");
        D = divide_exact(Rational(4) * (p * p * p) + Rational(27) * (q * q), b * b);
    }
    if (D.is_zero()) throw ValidationError("discriminant vanishes identically");
    return D;
}

SolutionSet singular_locus_V0(const CoverSpec& spec) {
    CubicModel m = reduce_to_cubic(spec);
    const std::vector<std::string> vars{"z", "u", "t"};
    MultiPoly z = poly_var(vars, "z");
    MultiPoly F = z * z * z + embed(m.r, vars) * z + embed(m.s, vars);
    Ideal I{vars, {F, differentiate(F, "z"), differentiate(F, "u"), differentiate(F, "t")}};
    return rational_solutions(I, spec.spair_budget);
}

bool general_smooth_V0(const CoverSpec& spec, unsigned long long* spairs) {
    if (spec.form != Form::GeneralABCD)
        throw ValidationError("smoothness certificates apply to the general form");
    validate_cover(spec);
    unsigned long long used = 0, n = 0;

    // cubic chart, localised away from b = 0
    auto [p, q] = cubic_pq(spec);
    const std::vector<std::string> v1{"z", "y", "u", "t"};
    MultiPoly z = poly_var(v1, "z");
    MultiPoly F = z * z * z + embed(p, v1) * z + embed(q, v1);
    Ideal loc{v1,
              {F, differentiate(F, "z"), differentiate(F, "u"), differentiate(F, "t"),
               poly_var(v1, "y") * embed(sec(spec, "b"), v1) - poly_const(v1, 1)}};
    bool ok1 = is_trivial(loc, spec.spair_budget, &n);
    used += n;

    // determinantal chart along b = 0: the three quadrics plus b plus every
    // 2x2 Jacobian minor must have no common zero
    TripleCoverEquations eq = build_general_equations(spec);
    const std::vector<std::string> v2{"z", "w", "t", "u"};
    Ideal rank{v2, {eq.g1, eq.g2, eq.g3, embed(sec(spec, "b"), v2)}};
    for (MultiPoly& m : jacobian_minors(eq, {"z", "w", "t", "u"}))
        rank.gens.push_back(std::move(m));
    bool ok2 = is_trivial(rank, spec.spair_budget, &n);
    used += n;

    if (spairs) *spairs += used;
    return ok1 && ok2;
}

bool check_smooth_over_infinity(const CoverSpec& spec, unsigned long long* spairs) {
    validate_cover(spec);
    PresetInfo pi = preset_info(spec.preset);
    MultiPoly D = branch_discriminant(spec);

    // The discriminant lies in 2(L1+L2), so its degree in u stays two short
    // of the top and the top surviving coefficient has nowhere to put a t:
    // it is a constant, and the cover stays smooth over the section at
    // infinity exactly when that constant is nonzero and the fibre over the
    // far ruling carries no singular point either.
    unsigned top = static_cast<unsigned>(2 * (pi.L1.a + pi.L2.a) - 2);
    if (deg_in(D, "u") > top) throw MathError("internal: discriminant exceeds its class");
    MultiPoly lead = coeff_in(D, "u", top);
    if (!lead.is_constant()) throw MathError("internal: top discriminant coefficient not constant");
    bool ok_top = lead.constant_value() != 0;

    if (spec.galois && spec.preset == Preset::Mi) {
        // same constant through the shortcut 27 b^2 (top coefficient of c)^2
        Rational beta = sec(spec, "b").constant_value();
        Rational kappa = coeff_in(sec(spec, "c"), "u", 4).constant_value();
        if (lead.constant_value() != Rational(27) * beta * beta * kappa * kappa)
            throw MathError("internal: galois infinity shortcut disagrees");
    }

    unsigned long long used = 0, n = 0;
    bool ok_fiber;
    if (cubic_path(spec)) {
        auto [p, q] = cubic_pq(spec);
        MultiPoly p1 = transitioned(p, 2 * pi.L1);
        MultiPoly q1 = transitioned(q, 3 * pi.L1);
        const std::vector<std::string> vars{"z", "v", "s"};
        MultiPoly z = poly_var(vars, "z");
        MultiPoly f1 = z * z * z + embed(p1, vars) * z + embed(q1, vars);
        Ideal I{vars,
                {f1, differentiate(f1, "z"), differentiate(f1, "v"), differentiate(f1, "s"),
                 poly_var(vars, "s")}};
        ok_fiber = is_trivial(I, spec.spair_budget, &n);
        used += n;
    } else {
        auto weights = section_weights(spec.form, spec.preset);
        MultiPoly a1 = transitioned(sec(spec, "a"), weights.at("a"));
        MultiPoly b1 = transitioned(sec(spec, "b"), weights.at("b"));
        MultiPoly c1 = transitioned(sec(spec, "c"), weights.at("c"));
        MultiPoly d1 = transitioned(sec(spec, "d"), weights.at("d"));

        auto [p, q] = cubic_pq(spec);
        MultiPoly p1 = transitioned(p, 2 * pi.L1);
        MultiPoly q1 = transitioned(q, 3 * pi.L1);
        const std::vector<std::string> vc{"z", "y", "v", "s"};
        MultiPoly z = poly_var(vc, "z");
        MultiPoly F1 = z * z * z + embed(p1, vc) * z + embed(q1, vc);
        Ideal loc{vc,
                  {F1, differentiate(F1, "z"), differentiate(F1, "v"), differentiate(F1, "s"),
                   poly_var(vc, "y") * embed(b1, vc) - poly_const(vc, 1), poly_var(vc, "s")}};
        bool ok1 = is_trivial(loc, spec.spair_budget, &n);
        used += n;

        const std::vector<std::string> vd{"z", "w", "v", "s"};
        TripleCoverEquations eq = make_equations(a1, b1, c1, d1, vd);
        Ideal rank{vd, {eq.g1, eq.g2, eq.g3, embed(b1, vd), poly_var(vd, "s")}};
        for (MultiPoly& m : jacobian_minors(eq, {"z", "w", "v", "s"}))
            rank.gens.push_back(std::move(m));
        bool ok2 = is_trivial(rank, spec.spair_budget, &n);
        used += n;
        ok_fiber = ok1 && ok2;
    }

    if (spairs) *spairs += used;
    return ok_top && ok_fiber;
}

bool is_totally_ramified_at(const CoverSpec& spec, const PlanePoint& at) {
    auto [p, q] = cubic_pq(spec);
    return evaluate(p, at) == 0 && evaluate(q, at) == 0;
}

namespace {

Rational form_coeff(const MultiPoly& f, unsigned et, unsigned eu) {
    for (const Term& t : f.terms)
        if (t.e[0] == et && t.e[1] == eu) return t.c;
    return 0;
}

// substitute t and u simultaneously by polynomials over the same list
MultiPoly subst_pair(const MultiPoly& f, const MultiPoly& it, const MultiPoly& iu) {
    unsigned dt = deg_in(f, "t"), du = deg_in(f, "u");
    std::vector<MultiPoly> pt{poly_const(f.vars, 1)}, pu{poly_const(f.vars, 1)};
    for (unsigned k = 1; k <= dt; ++k) pt.push_back(pt.back() * it);
    for (unsigned k = 1; k <= du; ++k) pu.push_back(pu.back() * iu);
    MultiPoly r = poly_zero(f.vars);
    for (const Term& t : f.terms) r = r + t.c * (pt[t.e[0]] * pu[t.e[1]]);
    return r;
}

}  // namespace

BranchPointClass classify_branch_point(const MultiPoly& disc, const PlanePoint& at) {
    BranchPointClass out;
    out.multiplicity = multiplicity_at(disc, at);
    if (out.multiplicity == 0) return out;  // Other: not on the curve at all
    MultiPoly cone = lowest_form(disc, at);

    if (out.multiplicity == 3) {
        // perfect cube tangent cone? alpha (t + lambda u)^3 or delta u^3
        Rational alpha = form_coeff(cone, 3, 0), beta = form_coeff(cone, 2, 1),
                 gamma = form_coeff(cone, 1, 2), delta = form_coeff(cone, 0, 3);
        bool cube = false;
        MultiPoly local = translate(disc, at);
        if (alpha != 0) {
            Rational lambda = beta / (Rational(3) * alpha);
            if (gamma == Rational(3) * alpha * lambda * lambda &&
                delta == alpha * lambda * lambda * lambda) {
                cube = true;
                // move the cone line t + lambda u onto the second coordinate
                MultiPoly t = poly_var(local.vars, "t"), u = poly_var(local.vars, "u");
                local = subst_pair(local, u - lambda * t, t);
            }
        } else if (beta == 0 && gamma == 0) {
            cube = true;  // cone already delta u^3
        }
        if (cube) {
            // one blow up: u = t u', divide by t^3.  The strict transform
            // meets the exceptional line only at the origin of this chart,
            // and the point is of type (3,3) exactly when another ordinary
            // triple point sits there.
            MultiPoly t = poly_var(local.vars, "t"), u = poly_var(local.vars, "u");
            MultiPoly strict = divide_exact(substitute(local, "u", t * u), t * t * t);
            PlanePoint origin{{"t", 0}, {"u", 0}};
            if (multiplicity_at(strict, origin) == 3 &&
                binary_form_squarefree(lowest_form(strict, origin)))
                out.type = SingularityType::TripleTriple;
            return out;
        }
    }

    if (binary_form_squarefree(cone)) out.type = SingularityType::Ordinary;
    return out;
}

PushforwardInvariants invariants_pushforward(Preset p) {
    PresetInfo pi = preset_info(p);
    DivisorClass K = canonical_class();
    PushforwardInvariants inv;
    inv.pg = h0(K) + h0(K + pi.L1) + h0(K + pi.L2);
    inv.chi = 3 + intersect(pi.L1, pi.L1 + K) / 2 + intersect(pi.L2, pi.L2 + K) / 2;
    return inv;
}

long long fiber_genus(Preset p) {
    // Hurwitz over a ruling fibre: 2g - 2 = 3(-2) + 2 + (2(L1+L2) - 2S).R,
    // the 2 from total ramification over the section at infinity
    PresetInfo pi = preset_info(p);
    long long simple = intersect(2 * (pi.L1 + pi.L2) - 2 * negative_section(), ruling());
    return (-6 + 2 + simple + 2) / 2;
}

std::pair<long long, long long> case_invariants(CaseLabel c) {
    switch (c) {
        case CaseLabel::M1: return {9, 5};
        case CaseLabel::M2: return {8, 4};
        case CaseLabel::M3: return {7, 4};
        case CaseLabel::M4_PinZ: return {6, 4};
        case CaseLabel::M4_PnotinZ: return {6, 4};
        case CaseLabel::N: return {8, 4};
        case CaseLabel::Unclassified: return {0, 0};
    }
    return {0, 0};
}

ClassificationReport classify_cover(const CoverSpec& spec) {
    validate_cover(spec);
    ClassificationReport rep;
    rep.pushforward = invariants_pushforward(spec.preset);
    rep.fibre_genus = fiber_genus(spec.preset);

    unsigned long long used = 0;
    rep.smooth_over_sigma_inf = check_smooth_over_infinity(spec, &used);

    bool cert_ok = true;
    if (cubic_path(spec)) {
        SolutionSet sols = singular_locus_V0(spec);
        used += sols.spairs_reduced;
        rep.solutions_complete = sols.complete_over_C;
        rep.singular_points = sols.points;

        // the galois covers are classified through c itself, everything else
        // through the discriminant
        MultiPoly D = spec.galois ? sec(spec, "c") : branch_discriminant(spec);
        std::vector<PlanePoint> proj;
        for (const PlanePoint& pt : sols.points) {
            PlanePoint q{{"t", pt.at("t")}, {"u", pt.at("u")}};
            if (std::find(proj.begin(), proj.end(), q) == proj.end()) proj.push_back(q);
        }
        for (const PlanePoint& q : proj) {
            if (evaluate(D, q) != 0)
                throw MathError("internal: singular point misses the branch curve");
            BranchPointReport bp;
            bp.at = q;
            bp.totally_ramified = is_totally_ramified_at(spec, q);
            bp.cls = classify_branch_point(D, q);
            rep.branch_points.push_back(bp);
        }
    } else {
        cert_ok = general_smooth_V0(spec, &used);
    }
    rep.spairs_used = used;

    if (!rep.solutions_complete) {
        rep.note = "rational point enumeration incomplete over C";
        return rep;
    }
    if (!rep.smooth_over_sigma_inf) {
        rep.note = "not smooth over the section at infinity";
        return rep;
    }
    if (!cert_ok) {
        rep.note = "smoothness certificate failed on the finite charts";
        return rep;
    }

    const std::size_t n = rep.branch_points.size();
    if (!cubic_path(spec)) {
        if (spec.preset == Preset::Mii)
            rep.label = CaseLabel::M4_PnotinZ;
    } else if (spec.preset == Preset::Mi) {
        if (n == 0) {
            rep.label = CaseLabel::M1;
        } else if (n == 1) {
            const BranchPointReport& bp = rep.branch_points[0];
            if (spec.galois && bp.totally_ramified &&
                bp.cls.type == SingularityType::Ordinary && bp.cls.multiplicity == 3)
                rep.label = CaseLabel::M4_PinZ;
            else if (!spec.galois && !bp.totally_ramified &&
                     bp.cls.type == SingularityType::TripleTriple)
                rep.label = CaseLabel::M2;
            else if (!spec.galois && !bp.totally_ramified &&
                     bp.cls.type == SingularityType::Ordinary && bp.cls.multiplicity == 4)
                rep.label = CaseLabel::M3;
        }
    } else if (spec.preset == Preset::Mii) {
        if (n == 0) rep.label = CaseLabel::M4_PnotinZ;
    } else if (spec.preset == Preset::N) {
        if (n == 1) {
            const BranchPointReport& bp = rep.branch_points[0];
            if (!bp.totally_ramified && bp.cls.type == SingularityType::Ordinary &&
                bp.cls.multiplicity == 8)
                rep.label = CaseLabel::N;
        }
    }

    if (rep.label == CaseLabel::Unclassified) {
        rep.note = "singular point pattern matches no case";
    } else {
        auto [k2, pg] = case_invariants(rep.label);
        rep.K2 = k2;
        rep.pg = pg;
    }
    return rep;
}

}  // namespace trico
