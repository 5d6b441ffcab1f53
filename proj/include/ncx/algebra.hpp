#pragma once

#include "ncx/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncx {

struct NonConfluentPresentation : NcxError {
	using NcxError::NcxError;
};

enum class GenKind { ZType, ZBarType, Generic };

struct Generator {
	int id = 0;
	std::string name;
	int grade = 0; // Z-grading / U(1) weight
	int partner = 0; // star partner id, involutive
	GenKind kind = GenKind::Generic;
};

using Word = std::vector<uint8_t>;

class NCPoly;

/// Finitely presented graded *-algebra with phase-commutation relations and
/// optional central-word reduction rules. Normal words are nondecreasing in
/// generator-id order; central rules then strip designated letter pairs.
class Presentation {
public:
	struct CentralRule {
		Word lhs; // product of these letters is central
		// rhs stored as raw (word, coefficient) pairs; words need not be normal
		std::vector<std::pair<Word, Scalar>> rhs;
	};

	std::vector<Generator> gens;
	bool has_swap_closure = true;
	std::vector<CentralRule> central_rules;

	int size() const { return static_cast<int>(gens.size()); }
	const Generator &gen(int id) const { return gens.at(id); }

	/// Coefficient c in g*h = c*(h*g); defined for all pairs, swap(g,g) = 1.
	const Scalar &swap(int g, int h) const { return swap_.at(g * gens.size() + h); }
	void set_swap(int g, int h, Scalar c);
	void finish(); // sizes the swap table; call after adding generators

	bool letter_is(int id, GenKind k) const { return gens[id].kind == k; }
	int grade_of(const Word &w) const;

	/// product over all (x in a, y in b) of swap(x, y); phases are central so
	/// any reordering path gives this same total.
	Scalar swap_all(const Word &a, const Word &b) const;

private:
	std::vector<Scalar> swap_;
};

/// Sparse normal-form noncommutative polynomial.
class NCPoly {
public:
	using Terms = std::map<Word, Scalar>;

	NCPoly() = default;
	explicit NCPoly(Scalar c)
	{
		if (!c.is_zero())
			terms_[Word{}] = std::move(c);
	}
	static NCPoly one() { return NCPoly(Scalar::one()); }

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t term_count() const { return terms_.size(); }

	void add_term(const Word &w, const Scalar &c);
	NCPoly &operator+=(const NCPoly &o);
	NCPoly &operator-=(const NCPoly &o);
	friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
	friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
	NCPoly operator-() const;
	friend NCPoly operator*(const Scalar &c, NCPoly p);
	friend bool operator==(const NCPoly &a, const NCPoly &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const NCPoly &a, const NCPoly &b) { return !(a == b); }

private:
	Terms terms_;
};

/// Reduction strategy; the two must agree on every input (confluence), which
/// the test suite checks on random words.
enum class Strategy { LeftFirst, RightFirst };

/// Normal form of a word: sort letters by the swap rules, then apply central
/// rules until none fires.
NCPoly normal_form(const Presentation &p, const Word &w, const Scalar &coeff = Scalar::one(),
                   Strategy st = Strategy::LeftFirst, bool use_central = true);

NCPoly nc_mul(const Presentation &p, const NCPoly &a, const NCPoly &b);
NCPoly nc_mul_word(const Presentation &p, const NCPoly &a, const Word &w);

/// Antilinear, word-reversing, partner-swapping involution.
NCPoly nc_star(const Presentation &p, const NCPoly &a);

std::map<int, NCPoly> grade_components(const Presentation &p, const NCPoly &a);

NCPoly nc_gen(const Presentation &p, int id);

} // namespace ncx
