#pragma once

#include <gmpxx.h>
#include <complex>
#include <string>

namespace ncx {

/// Exact Gaussian rational a + b*i with arbitrary-precision components.
struct GaussianRational {
	mpq_class re, im;

	GaussianRational() : re(0), im(0) {}
	GaussianRational(long a) : re(a), im(0) {}
	GaussianRational(long a, long b) : re(a), im(b) {}
	GaussianRational(mpq_class a, mpq_class b) : re(std::move(a)), im(std::move(b)) {}

	static GaussianRational i() { return GaussianRational(0, 1); }

	bool is_zero() const { return re == 0 && im == 0; }
	bool is_one() const { return re == 1 && im == 0; }

	GaussianRational conj() const { return {re, -im}; }

	GaussianRational operator-() const { return {-re, -im}; }

	GaussianRational &operator+=(const GaussianRational &o)
	{
		re += o.re;
		im += o.im;
		return *this;
	}
	GaussianRational &operator-=(const GaussianRational &o)
	{
		re -= o.re;
		im -= o.im;
		return *this;
	}
	friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
	friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }

	friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b)
	{
		return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
	}
	GaussianRational &operator*=(const GaussianRational &o) { return *this = *this * o; }

	/// Exact division; requires o != 0.
	friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &o)
	{
		mpq_class n = o.re * o.re + o.im * o.im;
		return {(a.re * o.re + a.im * o.im) / n, (a.im * o.re - a.re * o.im) / n};
	}

	friend bool operator==(const GaussianRational &a, const GaussianRational &b)
	{
		return a.re == b.re && a.im == b.im;
	}
	friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }
	friend bool operator<(const GaussianRational &a, const GaussianRational &b)
	{
		int c = cmp(a.re, b.re);
		if (c != 0)
			return c < 0;
		return cmp(a.im, b.im) < 0;
	}

	std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

	std::string str() const;
};

} // namespace ncx
