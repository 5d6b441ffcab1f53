#pragma once

#include "ncx/algebra.hpp"

#include <map>
#include <optional>

namespace ncx {

/// Letter of the universal calculus over the free *-algebra: a generator or
/// its differential. Encoded as id*2 + (is_d ? 1 : 0).
struct ULetter {
	uint8_t code = 0;

	static ULetter fn(int id) { return {static_cast<uint8_t>(id * 2)}; }
	static ULetter dl(int id) { return {static_cast<uint8_t>(id * 2 + 1)}; }
	int id() const { return code / 2; }
	bool is_d() const { return code % 2 == 1; }
	friend bool operator==(ULetter a, ULetter b) { return a.code == b.code; }
	friend bool operator<(ULetter a, ULetter b) { return a.code < b.code; }
};

using UWord = std::vector<ULetter>;

/// Element of the universal differential calculus: interleaved words over
/// {g, dg}; no letter rearrangement ever happens (Omega^1 is a free bimodule).
class UForm {
public:
	using Terms = std::map<UWord, Scalar>;

	UForm() = default;
	explicit UForm(Scalar c)
	{
		if (!c.is_zero())
			terms_[UWord{}] = std::move(c);
	}
	UForm(UWord w, Scalar c)
	{
		if (!c.is_zero())
			terms_[std::move(w)] = std::move(c);
	}

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const UWord &w, const Scalar &c);
	UForm &operator+=(const UForm &o);
	UForm &operator-=(const UForm &o);
	friend UForm operator+(UForm a, const UForm &b) { return a += b; }
	friend UForm operator-(UForm a, const UForm &b) { return a -= b; }
	UForm operator-() const;
	friend UForm operator*(const Scalar &c, const UForm &f);
	friend bool operator==(const UForm &a, const UForm &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const UForm &a, const UForm &b) { return !(a == b); }

	std::optional<int> homogeneous_degree() const;

private:
	Terms terms_;
};

/// Free *-algebra C<x_1..x_n, x_1^*..x_n^*> with its universal calculus and
/// the almost complex structure J(dx_k) = -dx_k^*, J(dx_k^*) = dx_k.
class FreeCalculus {
public:
	int n = 1; // number of x generators; ids 0..n-1 are x, n..2n-1 are x^*

	int partner(int id) const { return id < n ? id + n : id - n; }
	bool is_x(int id) const { return id < n; }

	UForm gen(int id) const { return UForm(UWord{ULetter::fn(id)}, Scalar::one()); }
	UForm dgen(int id) const { return UForm(UWord{ULetter::dl(id)}, Scalar::one()); }

	UForm wedge(const UForm &a, const UForm &b) const; // concatenation product
	UForm d(const UForm &a) const;
	UForm star(const UForm &a) const;
	UForm apply_J(const UForm &a) const;
	/// J tensor J on 2-forms: both d-letters replaced by their J-images.
	UForm apply_JJ(const UForm &a) const;

	/// (p,q) component via the eigenbasis xi_k^{+-} = dx_k -+ i dx_k^*.
	UForm project_pq(const UForm &a, int p, int q) const;

	int degree(const UWord &w) const;
};

int permutation_reversal_sign(int n); // independent oracle for epsilon_n

} // namespace ncx
