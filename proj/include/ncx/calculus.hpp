#pragma once

#include "ncx/algebra.hpp"

#include <array>
#include <map>
#include <optional>

namespace ncx {

enum class ModelKind { Free, ThetaPlane, ThetaSphere, ThetaProjective };

/// A monomial form: normal function word times a strictly increasing word of
/// d-letters (letter id = base generator id).
struct FormWord {
	Word func;
	Word letters;

	friend bool operator==(const FormWord &a, const FormWord &b)
	{
		return a.func == b.func && a.letters == b.letters;
	}
	friend bool operator<(const FormWord &a, const FormWord &b)
	{
		if (a.letters != b.letters)
			return a.letters < b.letters;
		return a.func < b.func;
	}

	int degree() const { return static_cast<int>(letters.size()); }
};

class Form {
public:
	using Terms = std::map<FormWord, Scalar>;

	Form() = default;
	explicit Form(Scalar c)
	{
		if (!c.is_zero())
			terms_[FormWord{}] = std::move(c);
	}
	Form(FormWord w, Scalar c)
	{
		if (!c.is_zero())
			terms_[std::move(w)] = std::move(c);
	}

	static Form zero() { return Form(); }

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t term_count() const { return terms_.size(); }

	void add_term(const FormWord &w, const Scalar &c);
	Form &operator+=(const Form &o);
	Form &operator-=(const Form &o);
	friend Form operator+(Form a, const Form &b) { return a += b; }
	friend Form operator-(Form a, const Form &b) { return a -= b; }
	Form operator-() const;
	friend Form operator*(const Scalar &c, const Form &f);
	friend bool operator==(const Form &a, const Form &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const Form &a, const Form &b) { return !(a == b); }

	/// True when every term has the same letter count.
	std::optional<int> homogeneous_degree() const;

private:
	Terms terms_;
};

/// The differential graded *-calculus of a theta-deformed model. Owns the
/// algebra presentation; the same swap-phase table drives function-letter
/// commutation, function-past-form pushes, and form-letter anticommutation
/// (forms contribute an extra sign).
class ThetaCalculus {
public:
	ModelKind kind = ModelKind::ThetaPlane;
	int n = 0; // indices run 0..n
	Presentation pres;
	/// Block-level form relations of the quotient calculi (empty for the plane):
	/// sphere: sum(dz zb) + sum(z dzb); projective: the two sums separately.
	std::vector<Form> relations;

	int num_gens() const { return 2 * (n + 1); }
	int z_id(int mu) const { return mu; }
	int zbar_id(int mu) const { return n + 1 + mu; }
	bool is_z(int id) const { return id <= n; }

	Form from_poly(const NCPoly &p) const;
	Form gen_form(int id) const; // dz^mu or dzb^mu as a 1-form

	Form wedge(const Form &a, const Form &b) const;
	Form mul_left(const NCPoly &a, const Form &f) const { return wedge(from_poly(a), f); }
	Form d(const Form &a) const;
	Form star(const Form &a) const;

	/// Component with p z-type and q zbar-type d-letters.
	Form project_pq(const Form &a, int p, int q) const;
	/// All (p,q) components of a, keyed by (p,q).
	std::map<std::pair<int, int>, Form> pq_components(const Form &a) const;

	Form partial(const Form &a) const; // sum over components of pi^{p+1,q} d
	Form dbar(const Form &a) const;    // sum over components of pi^{p,q+1} d

	/// (z-type count, zbar-type count) over functions and letters of one word.
	std::pair<int, int> weights(const FormWord &w) const;
	int u1_weight(const FormWord &w) const;
	/// Split by (total degree, U(1) weight); these are exact gradings on
	/// representatives for every theta model.
	std::map<std::pair<int, int>, Form> degree_weight_components(const Form &a) const;

	/// Literal equality of representatives. Quotient-aware equality lives in
	/// blocks.hpp (equal_mod_relations).
	bool plane_like() const { return kind == ModelKind::ThetaPlane || relations.empty(); }

private:
	// phase for sorting the letter word by adjacent swaps; zero on repeats
	std::optional<Word> sort_letters(Word letters, Scalar &coeff) const;
	friend class CalculusTestAccess;
};

ThetaCalculus make_theta_calculus(ModelKind kind, int n);

} // namespace ncx
