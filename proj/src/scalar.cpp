#include "ncx/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace ncx {

std::string GaussianRational::str() const
{
	std::ostringstream os;
	if (im == 0) {
		os << re.get_str();
	} else if (re == 0) {
		if (im == 1)
			os << "i";
		else if (im == -1)
			os << "-i";
		else
			os << im.get_str() << "i";
	} else {
		os << "(" << re.get_str();
		if (im > 0)
			os << "+";
		if (im == 1)
			os << "i";
		else if (im == -1)
			os << "-i";
		else
			os << im.get_str() << "i";
		os << ")";
	}
	return os.str();
}

PhaseExponent PhaseExponent::unit(int mu, int nu, int32_t exp)
{
	PhaseExponent p;
	if (mu == nu || exp == 0)
		return p;
	if (mu > nu) {
		std::swap(mu, nu);
		exp = -exp;
	}
	p.e.emplace_back(key(mu, nu), exp);
	return p;
}

PhaseExponent PhaseExponent::inverse() const
{
	PhaseExponent r = *this;
	for (auto &kv : r.e)
		kv.second = -kv.second;
	return r;
}

PhaseExponent operator*(const PhaseExponent &a, const PhaseExponent &b)
{
	PhaseExponent r;
	r.e.reserve(a.e.size() + b.e.size());
	size_t i = 0, j = 0;
	while (i < a.e.size() && j < b.e.size()) {
		if (a.e[i].first < b.e[j].first)
			r.e.push_back(a.e[i++]);
		else if (b.e[j].first < a.e[i].first)
			r.e.push_back(b.e[j++]);
		else {
			int32_t s = a.e[i].second + b.e[j].second;
			if (s != 0)
				r.e.emplace_back(a.e[i].first, s);
			++i, ++j;
		}
	}
	for (; i < a.e.size(); ++i)
		r.e.push_back(a.e[i]);
	for (; j < b.e.size(); ++j)
		r.e.push_back(b.e[j]);
	return r;
}

bool operator<(const PhaseExponent &a, const PhaseExponent &b)
{
	// Group order: compare exponents coordinatewise in key order (missing = 0).
	size_t i = 0, j = 0;
	while (i < a.e.size() || j < b.e.size()) {
		uint16_t ka = i < a.e.size() ? a.e[i].first : 0xffff;
		uint16_t kb = j < b.e.size() ? b.e[j].first : 0xffff;
		uint16_t k = std::min(ka, kb);
		int32_t ea = (ka == k) ? a.e[i].second : 0;
		int32_t eb = (kb == k) ? b.e[j].second : 0;
		if (ea != eb)
			return ea < eb;
		if (ka == k)
			++i;
		if (kb == k)
			++j;
	}
	return false;
}

std::complex<double> PhaseExponent::eval(const std::vector<std::vector<double>> &theta) const
{
	double arg = 0;
	for (auto &[k, exp] : e) {
		int mu = k / 256, nu = k % 256;
		arg += exp * theta.at(mu).at(nu);
	}
	return std::polar(1.0, arg);
}

std::string PhaseExponent::str() const
{
	if (e.empty())
		return "";
	std::ostringstream os;
	bool first = true;
	for (auto &[k, exp] : e) {
		if (!first)
			os << "*";
		first = false;
		os << "L" << (k / 256) << (k % 256);
		if (exp != 1)
			os << "^" << exp;
	}
	return os.str();
}

Scalar Scalar::phase(int mu, int nu, int32_t exp)
{
	if (mu == nu)
		return one();
	return Scalar(PhaseExponent::unit(mu, nu, exp), GaussianRational(1));
}

bool Scalar::is_one() const
{
	return terms_.size() == 1 && terms_.begin()->first.is_trivial() && terms_.begin()->second.is_one();
}

Scalar Scalar::conj() const
{
	Scalar r;
	for (auto &[p, c] : terms_)
		r.terms_[p.inverse()] = c.conj();
	return r;
}

Scalar Scalar::operator-() const
{
	Scalar r;
	for (auto &[p, c] : terms_)
		r.terms_[p] = -c;
	return r;
}

void Scalar::add_term(const PhaseExponent &p, const GaussianRational &c)
{
	if (c.is_zero())
		return;
	auto it = terms_.find(p);
	if (it == terms_.end()) {
		terms_.emplace(p, c);
	} else {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Scalar &Scalar::operator+=(const Scalar &o)
{
	for (auto &[p, c] : o.terms_)
		add_term(p, c);
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
	for (auto &[p, c] : o.terms_)
		add_term(p, -c);
	return *this;
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
	Scalar r;
	for (auto &[pa, ca] : a.terms_)
		for (auto &[pb, cb] : b.terms_)
			r.add_term(pa * pb, ca * cb);
	return r;
}

Scalar Scalar::unit_inverse() const
{
	if (terms_.size() != 1)
		throw NcxError("unit_inverse: scalar is not a single term");
	auto &[p, c] = *terms_.begin();
	return Scalar(p.inverse(), GaussianRational(1) / c);
}

const std::pair<const PhaseExponent, GaussianRational> &Scalar::leading() const
{
	if (terms_.empty())
		throw NcxError("leading: zero scalar");
	return *terms_.rbegin();
}

Scalar Scalar::divide_exact(const Scalar &a, const Scalar &b)
{
	if (b.is_zero())
		throw NcxError("divide_exact: division by zero");
	if (a.is_zero())
		return Scalar();
	if (b.is_unit())
		return a * b.unit_inverse();
	Scalar rem = a, quot;
	auto &lb = b.leading();
	size_t guard = 4096 + 64 * (a.term_count() + 1) * (b.term_count() + 1);
	while (!rem.is_zero()) {
		if (guard-- == 0)
			throw NcxError("divide_exact: not exactly divisible");
		auto &lr = rem.leading();
		Scalar t(lr.first * lb.first.inverse(), lr.second / lb.second);
		quot += t;
		rem -= t * b;
	}
	return quot;
}

std::complex<double> Scalar::eval(const std::vector<std::vector<double>> &theta) const
{
	check_skew(theta);
	std::complex<double> r = 0;
	for (auto &[p, c] : terms_)
		r += c.to_complex() * p.eval(theta);
	return r;
}

std::string Scalar::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[p, c] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		std::string ps = p.str();
		if (ps.empty())
			os << c.str();
		else if (c.is_one())
			os << ps;
		else
			os << c.str() << "*" << ps;
	}
	return os.str();
}

void check_skew(const std::vector<std::vector<double>> &theta)
{
	size_t n = theta.size();
	for (size_t r = 0; r < n; ++r) {
		if (theta[r].size() != n)
			throw NonSkewTheta("theta is not square");
		for (size_t c = 0; c < n; ++c)
			if (std::abs(theta[r][c] + theta[c][r]) > 1e-12)
				throw NonSkewTheta("theta is not skew-symmetric");
	}
}

std::vector<std::vector<double>> random_skew_theta(int n, uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::vector<std::vector<double>> t(n, std::vector<double>(n, 0.0));
	for (int mu = 0; mu < n; ++mu)
		for (int nu = mu + 1; nu < n; ++nu) {
			double v = 6.283185307179586 * (double(rng() >> 11) / 9007199254740992.0);
			t[mu][nu] = v;
			t[nu][mu] = -v;
		}
	return t;
}

} // namespace ncx
