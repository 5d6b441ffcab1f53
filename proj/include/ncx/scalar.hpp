#pragma once

#include "ncx/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncx {

struct NcxError : std::runtime_error {
	explicit NcxError(const std::string &what) : std::runtime_error(what) {}
};

struct NonSkewTheta : NcxError {
	using NcxError::NcxError;
};

/// Laurent monomial in the formal unit phases L_{mu nu} = e^{i theta_{mu nu}}.
///
/// Only pairs with mu < nu are stored (theta is skew-symmetric, so
/// L_{nu mu} = L_{mu nu}^{-1} and L_{mu mu} = 1); zero exponents are dropped.
struct PhaseExponent {
	// (key, exponent), key = mu*256 + nu with mu < nu, sorted by key
	std::vector<std::pair<uint16_t, int32_t>> e;

	static uint16_t key(int mu, int nu) { return static_cast<uint16_t>(mu * 256 + nu); }

	static PhaseExponent unit(int mu, int nu, int32_t exp);

	bool is_trivial() const { return e.empty(); }

	PhaseExponent inverse() const;

	friend PhaseExponent operator*(const PhaseExponent &a, const PhaseExponent &b);

	friend bool operator==(const PhaseExponent &a, const PhaseExponent &b) { return a.e == b.e; }
	friend bool operator<(const PhaseExponent &a, const PhaseExponent &b);

	std::complex<double> eval(const std::vector<std::vector<double>> &theta) const;

	std::string str() const;
};

/// Exact coefficient: finite sum of Gaussian-rational multiples of phase monomials.
/// This is the group ring of a free abelian group over Q(i); an integral domain.
class Scalar {
public:
	using Terms = std::map<PhaseExponent, GaussianRational>;

	Scalar() = default;
	Scalar(long n)
	{
		if (n != 0)
			terms_[PhaseExponent{}] = GaussianRational(n);
	}
	explicit Scalar(GaussianRational c)
	{
		if (!c.is_zero())
			terms_[PhaseExponent{}] = std::move(c);
	}
	Scalar(PhaseExponent p, GaussianRational c)
	{
		if (!c.is_zero())
			terms_[std::move(p)] = std::move(c);
	}

	static Scalar zero() { return Scalar(); }
	static Scalar one() { return Scalar(1); }
	static Scalar i() { return Scalar(GaussianRational::i()); }
	/// The phase monomial L_{mu nu}^exp (indices in either order).
	static Scalar phase(int mu, int nu, int32_t exp = 1);

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_one() const;
	/// Nonzero single-term scalars are units of the ring.
	bool is_unit() const { return terms_.size() == 1; }
	size_t term_count() const { return terms_.size(); }

	Scalar conj() const;
	Scalar operator-() const;

	Scalar &operator+=(const Scalar &o);
	Scalar &operator-=(const Scalar &o);
	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(const Scalar &a, const Scalar &b);
	Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

	friend bool operator==(const Scalar &a, const Scalar &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
	friend bool operator<(const Scalar &a, const Scalar &b) { return a.terms_ < b.terms_; }

	/// Multiplicative inverse of a single-term scalar.
	Scalar unit_inverse() const;

	/// Exact quotient a/b in the Laurent ring; throws NcxError if not divisible.
	static Scalar divide_exact(const Scalar &a, const Scalar &b);

	/// Leading term under the monomial order on PhaseExponent.
	const std::pair<const PhaseExponent, GaussianRational> &leading() const;

	/// Substitute L_{mu nu} = exp(i theta_{mu nu}); theta must be skew within 1e-12.
	std::complex<double> eval(const std::vector<std::vector<double>> &theta) const;

	void add_term(const PhaseExponent &p, const GaussianRational &c);

	std::string str() const;

private:
	Terms terms_;
};

/// Checks |theta_{mu nu} + theta_{nu mu}| <= 1e-12 for all entries; throws NonSkewTheta.
void check_skew(const std::vector<std::vector<double>> &theta);

/// Deterministic random skew matrix for numeric cross-checks.
std::vector<std::vector<double>> random_skew_theta(int n, uint64_t seed);

} // namespace ncx
