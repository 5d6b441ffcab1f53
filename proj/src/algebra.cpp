#include "ncx/algebra.hpp"

#include <algorithm>
#include <deque>

namespace ncx {

void Presentation::set_swap(int g, int h, Scalar c)
{
	swap_.at(g * gens.size() + h) = std::move(c);
}

void Presentation::finish()
{
	swap_.assign(gens.size() * gens.size(), Scalar::one());
}

int Presentation::grade_of(const Word &w) const
{
	int g = 0;
	for (uint8_t id : w)
		g += gens[id].grade;
	return g;
}

Scalar Presentation::swap_all(const Word &a, const Word &b) const
{
	Scalar c = Scalar::one();
	for (uint8_t x : a)
		for (uint8_t y : b)
			c *= swap(x, y);
	return c;
}

void NCPoly::add_term(const Word &w, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto it = terms_.find(w);
	if (it == terms_.end()) {
		terms_.emplace(w, c);
	} else {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

NCPoly &NCPoly::operator+=(const NCPoly &o)
{
	for (auto &[w, c] : o.terms_)
		add_term(w, c);
	return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o)
{
	for (auto &[w, c] : o.terms_)
		add_term(w, -c);
	return *this;
}

NCPoly NCPoly::operator-() const
{
	NCPoly r;
	for (auto &[w, c] : terms_)
		r.terms_[w] = -c;
	return r;
}

NCPoly operator*(const Scalar &c, NCPoly p)
{
	if (c.is_zero())
		return NCPoly();
	NCPoly r;
	for (auto &[w, t] : p.terms_)
		r.add_term(w, c * t);
	return r;
}

namespace {

// Sort w into nondecreasing id order, multiplying coeff by the swap phase of
// every adjacent transposition. Strategy picks which descent to resolve first;
// phases are central so both give the same result on swap rules alone.
void sort_word(const Presentation &p, Word &w, Scalar &coeff, Strategy st)
{
	while (true) {
		int pos = -1;
		if (st == Strategy::LeftFirst) {
			for (size_t i = 0; i + 1 < w.size(); ++i)
				if (w[i] > w[i + 1]) {
					pos = static_cast<int>(i);
					break;
				}
		} else {
			for (size_t i = w.size(); i-- > 1;)
				if (w[i - 1] > w[i]) {
					pos = static_cast<int>(i - 1);
					break;
				}
		}
		if (pos < 0)
			return;
		coeff *= p.swap(w[pos], w[pos + 1]);
		std::swap(w[pos], w[pos + 1]);
	}
}

// Finds the central rule letters in w (as a sub-multiset) and moves them to
// the front, one by one, accumulating swap phases. Returns false if the rule
// does not apply.
bool extract_rule(const Presentation &p, const Presentation::CentralRule &rule, Word &w, Scalar &coeff,
                  Strategy st)
{
	for (size_t k = 0; k < rule.lhs.size(); ++k) {
		uint8_t want = rule.lhs[k];
		int pos = -1;
		if (st == Strategy::LeftFirst) {
			for (size_t i = k; i < w.size(); ++i)
				if (w[i] == want) {
					pos = static_cast<int>(i);
					break;
				}
		} else {
			for (size_t i = w.size(); i-- > k;)
				if (w[i] == want) {
					pos = static_cast<int>(i);
					break;
				}
		}
		if (pos < 0)
			return false;
		for (int j = pos; j > static_cast<int>(k); --j) {
			coeff *= p.swap(w[j - 1], w[j]);
			std::swap(w[j - 1], w[j]);
		}
	}
	return true;
}

} // namespace

NCPoly normal_form(const Presentation &p, const Word &w0, const Scalar &coeff0, Strategy st, bool use_central)
{
	NCPoly out;
	std::deque<std::pair<Word, Scalar>> work;
	work.emplace_back(w0, coeff0);
	size_t guard = 1u << 22;
	while (!work.empty()) {
		if (guard-- == 0)
			throw NonConfluentPresentation("normal_form: reduction did not terminate");
		auto [w, c] = std::move(work.front());
		work.pop_front();
		if (c.is_zero())
			continue;
		sort_word(p, w, c, st);
		bool fired = false;
		if (use_central) {
			for (const auto &rule : p.central_rules) {
				Word cand = w;
				Scalar phase = c;
				if (!extract_rule(p, rule, cand, phase, st))
					continue;
				Word rest(cand.begin() + rule.lhs.size(), cand.end());
				for (const auto &[rw, rc] : rule.rhs) {
					Word nw = rw;
					nw.insert(nw.end(), rest.begin(), rest.end());
					work.emplace_back(std::move(nw), phase * rc);
				}
				fired = true;
				break;
			}
		}
		if (!fired)
			out.add_term(w, c);
	}
	return out;
}

NCPoly nc_mul(const Presentation &p, const NCPoly &a, const NCPoly &b)
{
	NCPoly r;
	for (auto &[wa, ca] : a.terms())
		for (auto &[wb, cb] : b.terms()) {
			Word w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			r += normal_form(p, w, ca * cb);
		}
	return r;
}

NCPoly nc_mul_word(const Presentation &p, const NCPoly &a, const Word &w)
{
	NCPoly b;
	b.add_term(w, Scalar::one());
	return nc_mul(p, a, normal_form(p, w));
}

NCPoly nc_star(const Presentation &p, const NCPoly &a)
{
	NCPoly r;
	for (auto &[w, c] : a.terms()) {
		Word sw(w.rbegin(), w.rend());
		for (auto &id : sw)
			id = static_cast<uint8_t>(p.gen(id).partner);
		r += normal_form(p, sw, c.conj());
	}
	return r;
}

std::map<int, NCPoly> grade_components(const Presentation &p, const NCPoly &a)
{
	std::map<int, NCPoly> r;
	for (auto &[w, c] : a.terms())
		r[p.grade_of(w)].add_term(w, c);
	return r;
}

NCPoly nc_gen(const Presentation &p, int id)
{
	NCPoly r;
	r.add_term(Word{static_cast<uint8_t>(id)}, Scalar::one());
	(void)p;
	return r;
}

} // namespace ncx
