#pragma once

#include "ncx/calculus.hpp"
#include "ncx/universal.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace ncx {

struct AxiomViolation : NcxError {
	using NcxError::NcxError;
};

/// Almost complex structure on a theta model: the image of each Omega^1
/// generator letter. Extended to all forms as a bimodule derivation.
struct ThetaACS {
	std::vector<Form> action; // indexed by letter id

	static ThetaACS standard(const ThetaCalculus &c);
	/// Diagonal sign flip on one letter; violates J(xi^*) = (J xi)^*.
	static ThetaACS broken_axiom(const ThetaCalculus &c);
	/// Axiom-passing but non-integrable J with function coefficients (n >= 1):
	/// J dz^1 = i dz^1 + zb^1 dzb^0 with the star-compatible completion.
	static ThetaACS broken_nonintegrable(const ThetaCalculus &c);
};

Form acs_apply(const ThetaCalculus &c, const ThetaACS &j, const Form &a);
/// J wedge J on homogeneous 2-forms.
Form acs_apply_pair(const ThetaCalculus &c, const ThetaACS &j, const Form &a);

struct CheckResult {
	std::string name;
	bool pass = false;
	std::string residual; // pretty-printed failure witness
};

struct CheckReport {
	std::vector<CheckResult> checks;
	bool all_pass() const
	{
		for (auto &c : checks)
			if (!c.pass)
				return false;
		return true;
	}
	void add(std::string name, bool pass, std::string residual = "")
	{
		checks.push_back({std::move(name), pass, std::move(residual)});
	}
};

struct IntegrabilityReport {
	bool axioms_ok = true;
	CheckReport axiom_checks;
	// one entry per generator per condition; names identify both
	CheckReport condition_checks;
	bool integrable = false;
	bool verdicts_agree = false;
	std::array<bool, 4> verdicts{}; // N1, N2, N3 on Omega^1 gens; JdJd on algebra gens
};

/// Uniform view of a model for the generic batteries. Implementations for the
/// theta and free calculi live in models.hpp.
template <typename FormT> struct ModelOps {
	std::function<FormT(const FormT &, const FormT &)> wedge;
	std::function<FormT(const FormT &)> d, star, J, JJ;
	std::function<FormT(const FormT &, int, int)> project;
	std::function<FormT(const FormT &)> partial, dbar;
	std::function<bool(const FormT &)> is_zero; // zero test mod relations
	std::function<std::string(const FormT &)> render;
	std::function<FormT(std::mt19937_64 &, int)> random_form; // arg: exact degree
	std::vector<FormT> one_form_gens;
	std::vector<std::string> one_form_gen_names;
	std::vector<FormT> alg_gens; // degree-0 forms
	std::vector<FormT> random_zero_forms;
	int max_pq = 0; // letters per type bound (theta: n+1)
};

template <typename FormT>
CheckReport axiom_suite(const ModelOps<FormT> &m, std::mt19937_64 &rng, int iterations);

template <typename FormT>
IntegrabilityReport check_integrability(const ModelOps<FormT> &m, bool enforce_axioms = true);

template <typename FormT>
CheckReport dolbeault_identity_suite(const ModelOps<FormT> &m, std::mt19937_64 &rng, int iterations);

/// The five equivalent integrability conditions, each evaluated independently;
/// returns one verdict per condition.
template <typename FormT>
std::array<bool, 5> five_conditions(const ModelOps<FormT> &m, std::mt19937_64 &rng, int iterations);

// ---- implementation -------------------------------------------------------

template <typename FormT>
CheckReport axiom_suite(const ModelOps<FormT> &m, std::mt19937_64 &rng, int iterations)
{
	CheckReport rep;
	// Defn 2.10 on generators
	for (size_t g = 0; g < m.one_form_gens.size(); ++g) {
		const auto &xi = m.one_form_gens[g];
		const auto &nm = m.one_form_gen_names[g];
		FormT jj = m.J(m.J(xi)) + xi;
		rep.add("J^2=-1 on " + nm, m.is_zero(jj), m.render(jj));
		FormT st = m.J(m.star(xi)) - m.star(m.J(xi));
		rep.add("J(xi*)=(J xi)* on " + nm, m.is_zero(st), m.render(st));
	}
	for (int it = 0; it < iterations; ++it) {
		FormT xi = m.random_form(rng, 1);
		FormT jj = m.J(m.J(xi)) + xi;
		if (!m.is_zero(jj)) {
			rep.add("J^2=-1 on random 1-forms", false, m.render(jj));
			break;
		}
		FormT st = m.J(m.star(xi)) - m.star(m.J(xi));
		if (!m.is_zero(st)) {
			rep.add("J(xi*)=(J xi)* on random 1-forms", false, m.render(st));
			break;
		}
		// bimodule: J(a xi b) = a J(xi) b for random 0-forms a, b
		FormT a = m.random_form(rng, 0), b = m.random_form(rng, 0);
		FormT lhs = m.J(m.wedge(m.wedge(a, xi), b));
		FormT rhs = m.wedge(m.wedge(a, m.J(xi)), b);
		if (!m.is_zero(lhs - rhs)) {
			rep.add("J bimodule map on random a.xi.b", false, m.render(lhs - rhs));
			break;
		}
		if (it == iterations - 1)
			rep.add("Defn 2.10 randomized (J^2, star, bimodule)", true);
	}
	// Defn 2.5 star-calculus laws
	for (int it = 0; it < iterations; ++it) {
		int dg = static_cast<int>(rng() % 3);
		FormT xi = m.random_form(rng, dg);
		FormT inv = m.star(m.star(xi)) - xi;
		if (!m.is_zero(inv)) {
			rep.add("star involution", false, m.render(inv));
			break;
		}
		FormT dstar = m.star(m.d(xi)) - m.d(m.star(xi));
		if (!m.is_zero(dstar)) {
			rep.add("(d xi)* = d(xi*)", false, m.render(dstar));
			break;
		}
		int dg2 = static_cast<int>(rng() % 2);
		FormT eta = m.random_form(rng, dg2);
		FormT pr = m.star(m.wedge(xi, eta));
		FormT ex = m.wedge(m.star(eta), m.star(xi));
		if ((dg * dg2) % 2 == 1)
			ex = -ex;
		if (!m.is_zero(pr - ex)) {
			rep.add("(xi^eta)* = (-1)^{|xi||eta|} eta* ^ xi*", false, m.render(pr - ex));
			break;
		}
		if (it == iterations - 1)
			rep.add("Defn 2.5 randomized (involution, d-star, product-star)", true);
	}
	return rep;
}

template <typename FormT>
IntegrabilityReport check_integrability(const ModelOps<FormT> &m, bool enforce_axioms)
{
	IntegrabilityReport rep;
	// axioms first (generator-level, deterministic part)
	for (size_t g = 0; g < m.one_form_gens.size(); ++g) {
		const auto &xi = m.one_form_gens[g];
		const auto &nm = m.one_form_gen_names[g];
		FormT jj = m.J(m.J(xi)) + xi;
		bool ok1 = m.is_zero(jj);
		rep.axiom_checks.add("J^2=-1 on " + nm, ok1, ok1 ? "" : m.render(jj));
		FormT st = m.J(m.star(xi)) - m.star(m.J(xi));
		bool ok2 = m.is_zero(st);
		rep.axiom_checks.add("J(xi*)=(J xi)* on " + nm, ok2, ok2 ? "" : m.render(st));
		rep.axioms_ok = rep.axioms_ok && ok1 && ok2;
	}
	if (!rep.axioms_ok && enforce_axioms)
		throw AxiomViolation("check_integrability: J violates Defn 2.10");

	std::array<bool, 4> ok{true, true, true, true};
	for (size_t g = 0; g < m.one_form_gens.size(); ++g) {
		const auto &xi = m.one_form_gens[g];
		const auto &nm = m.one_form_gen_names[g];
		FormT dxi = m.d(xi), djxi = m.d(m.J(xi));
		FormT n1 = djxi - m.JJ(djxi) - m.J(dxi);
		FormT n2 = m.J(m.J(djxi)) + Scalar(2) * m.J(dxi);
		FormT n3 = m.J(m.J(dxi)) - Scalar(2) * m.J(djxi);
		bool z1 = m.is_zero(n1), z2 = m.is_zero(n2), z3 = m.is_zero(n3);
		rep.condition_checks.add("N1[(1-J^J)dJ - Jd](" + nm + ")", z1, z1 ? "" : m.render(n1));
		rep.condition_checks.add("N2[J^2 dJ + 2Jd](" + nm + ")", z2, z2 ? "" : m.render(n2));
		rep.condition_checks.add("N3[J^2 d - 2JdJ](" + nm + ")", z3, z3 ? "" : m.render(n3));
		ok[0] = ok[0] && z1;
		ok[1] = ok[1] && z2;
		ok[2] = ok[2] && z3;
	}
	for (size_t g = 0; g < m.alg_gens.size(); ++g) {
		FormT n4 = m.J(m.d(m.J(m.d(m.alg_gens[g]))));
		bool z4 = m.is_zero(n4);
		rep.condition_checks.add("N4[JdJd](gen " + std::to_string(g) + ")", z4, z4 ? "" : m.render(n4));
		ok[3] = ok[3] && z4;
	}
	rep.verdicts = ok;
	rep.verdicts_agree = (ok[0] == ok[1] && ok[1] == ok[2] && ok[2] == ok[3]);
	rep.integrable = ok[0] && ok[1] && ok[2] && ok[3];
	return rep;
}

template <typename FormT>
CheckReport dolbeault_identity_suite(const ModelOps<FormT> &m, std::mt19937_64 &rng, int iterations)
{
	CheckReport rep;
	bool p2 = true, db2 = true, anti = true, sum = true, starsw = true, super = true, bidir = true;
	for (int it = 0; it < iterations; ++it) {
		int dg = static_cast<int>(rng() % 3);
		FormT xi = m.random_form(rng, dg);
		p2 = p2 && m.is_zero(m.partial(m.partial(xi)));
		db2 = db2 && m.is_zero(m.dbar(m.dbar(xi)));
		anti = anti && m.is_zero(m.partial(m.dbar(xi)) + m.dbar(m.partial(xi)));
		sum = sum && m.is_zero(m.d(xi) - m.partial(xi) - m.dbar(xi));
		starsw = starsw && m.is_zero(m.star(m.dbar(xi)) - m.partial(m.star(xi))) &&
		         m.is_zero(m.star(m.partial(xi)) - m.dbar(m.star(xi)));
		// super-derivation property on random pairs
		FormT eta = m.random_form(rng, static_cast<int>(rng() % 2));
		FormT we = m.wedge(xi, eta);
		FormT lhs = m.partial(we);
		FormT rhs = m.wedge(m.partial(xi), eta) +
		            ((dg % 2) ? -m.wedge(xi, m.partial(eta)) : m.wedge(xi, m.partial(eta)));
		super = super && m.is_zero(lhs - rhs);
		FormT lhsb = m.dbar(we);
		FormT rhsb = m.wedge(m.dbar(xi), eta) +
		             ((dg % 2) ? -m.wedge(xi, m.dbar(eta)) : m.wedge(xi, m.dbar(eta)));
		super = super && m.is_zero(lhsb - rhsb);
		// d of a (p,q) component has only (p+1,q) and (p,q+1) parts
		for (int p = 0; p + 0 <= dg && p <= m.max_pq; ++p) {
			int q = dg - p;
			if (q < 0 || q > m.max_pq)
				continue;
			FormT comp = m.project(xi, p, q);
			FormT dd = m.d(comp);
			FormT allowed = m.project(dd, p + 1, q) + m.project(dd, p, q + 1);
			bidir = bidir && m.is_zero(dd - allowed);
		}
	}
	rep.add("partial^2 = 0", p2);
	rep.add("dbar^2 = 0", db2);
	rep.add("partial dbar + dbar partial = 0", anti);
	rep.add("d = partial + dbar", sum);
	rep.add("dbar(xi)* = partial(xi*)", starsw);
	rep.add("partial/dbar super-derivations", super);
	rep.add("d(Omega^{p,q}) in (p+1,q)+(p,q+1)", bidir);
	return rep;
}

template <typename FormT>
std::array<bool, 5> five_conditions(const ModelOps<FormT> &m, std::mt19937_64 &rng, int iterations)
{
	std::array<bool, 5> ok{true, true, true, true, true};
	for (auto &a : m.alg_gens) {
		ok[0] = ok[0] && m.is_zero(m.dbar(m.dbar(a)));
		ok[1] = ok[1] && m.is_zero(m.partial(m.partial(a)));
	}
	for (int it = 0; it < iterations; ++it) {
		FormT xi = m.random_form(rng, 1);
		ok[2] = ok[2] && m.is_zero(m.d(xi) - m.partial(xi) - m.dbar(xi));
		FormT xi10 = m.project(xi, 1, 0);
		FormT d10 = m.d(xi10);
		ok[3] = ok[3] && m.is_zero(d10 - m.project(d10, 2, 0) - m.project(d10, 1, 1));
		FormT xi01 = m.project(xi, 0, 1);
		FormT d01 = m.d(xi01);
		ok[4] = ok[4] && m.is_zero(d01 - m.project(d01, 1, 1) - m.project(d01, 0, 2));
	}
	return ok;
}

} // namespace ncx
