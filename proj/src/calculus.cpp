#include "ncx/calculus.hpp"

#include <algorithm>

namespace ncx {

void Form::add_term(const FormWord &w, const Scalar &c)
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

Form &Form::operator+=(const Form &o)
{
	for (auto &[w, c] : o.terms_)
		add_term(w, c);
	return *this;
}

Form &Form::operator-=(const Form &o)
{
	for (auto &[w, c] : o.terms_)
		add_term(w, -c);
	return *this;
}

Form Form::operator-() const
{
	Form r;
	for (auto &[w, c] : terms_)
		r.terms_[w] = -c;
	return r;
}

Form operator*(const Scalar &c, const Form &f)
{
	Form r;
	if (c.is_zero())
		return r;
	for (auto &[w, t] : f.terms_)
		r.add_term(w, c * t);
	return r;
}

std::optional<int> Form::homogeneous_degree() const
{
	std::optional<int> deg;
	for (auto &[w, c] : terms_) {
		if (!deg)
			deg = w.degree();
		else if (*deg != w.degree())
			return std::nullopt;
	}
	return deg ? deg : std::optional<int>(0);
}

Form ThetaCalculus::from_poly(const NCPoly &p) const
{
	Form r;
	for (auto &[w, c] : p.terms())
		r.add_term(FormWord{w, {}}, c);
	return r;
}

Form ThetaCalculus::gen_form(int id) const
{
	return Form(FormWord{{}, {static_cast<uint8_t>(id)}}, Scalar::one());
}

std::optional<Word> ThetaCalculus::sort_letters(Word letters, Scalar &coeff) const
{
	// insertion sort; adjacent swap (x,y)->(y,x) contributes -swap(x,y)
	for (size_t i = 1; i < letters.size(); ++i) {
		for (size_t j = i; j > 0 && letters[j - 1] >= letters[j]; --j) {
			if (letters[j - 1] == letters[j])
				return std::nullopt;
			coeff *= -pres.swap(letters[j - 1], letters[j]);
			std::swap(letters[j - 1], letters[j]);
		}
	}
	return letters;
}

Form ThetaCalculus::wedge(const Form &a, const Form &b) const
{
	Form out;
	for (auto &[wa, ca] : a.terms()) {
		for (auto &[wb, cb] : b.terms()) {
			Scalar coeff = ca * cb;
			// move b's function letters left past a's form letters
			for (uint8_t ell : wa.letters)
				for (uint8_t g : wb.func)
					coeff *= pres.swap(g, ell).unit_inverse();
			// merged letter word
			Word letters = wa.letters;
			letters.insert(letters.end(), wb.letters.begin(), wb.letters.end());
			auto sorted = sort_letters(std::move(letters), coeff);
			if (!sorted)
				continue;
			// function part
			Word fw = wa.func;
			fw.insert(fw.end(), wb.func.begin(), wb.func.end());
			NCPoly f = normal_form(pres, fw, coeff);
			for (auto &[w, c] : f.terms())
				out.add_term(FormWord{w, *sorted}, c);
		}
	}
	return out;
}

Form ThetaCalculus::d(const Form &a) const
{
	Form out;
	for (auto &[w, c] : a.terms()) {
		for (size_t i = 0; i < w.func.size(); ++i) {
			uint8_t m = w.func[i];
			Scalar coeff = c;
			// new d-letter crosses the function letters to its right
			for (size_t j = i + 1; j < w.func.size(); ++j)
				coeff *= pres.swap(w.func[j], m).unit_inverse();
			Word func = w.func;
			func.erase(func.begin() + i);
			Word letters;
			letters.reserve(w.letters.size() + 1);
			letters.push_back(m);
			letters.insert(letters.end(), w.letters.begin(), w.letters.end());
			auto sorted = sort_letters(std::move(letters), coeff);
			if (!sorted)
				continue;
			out.add_term(FormWord{func, *sorted}, coeff);
		}
	}
	return out;
}

Form ThetaCalculus::star(const Form &a) const
{
	Form out;
	for (auto &[w, c] : a.terms()) {
		size_t k = w.letters.size();
		Scalar coeff = c.conj();
		if ((k * (k - 1) / 2) % 2 == 1)
			coeff = -coeff;
		Word sl(w.letters.rbegin(), w.letters.rend());
		for (auto &id : sl)
			id = static_cast<uint8_t>(pres.gen(id).partner);
		Word sf(w.func.rbegin(), w.func.rend());
		for (auto &id : sf)
			id = static_cast<uint8_t>(pres.gen(id).partner);
		// starred functions start to the right of the starred letters
		for (uint8_t ell : sl)
			for (uint8_t g : sf)
				coeff *= pres.swap(g, ell).unit_inverse();
		auto sorted = sort_letters(std::move(sl), coeff);
		if (!sorted)
			continue;
		NCPoly f = normal_form(pres, sf, coeff);
		for (auto &[fw, fc] : f.terms())
			out.add_term(FormWord{fw, *sorted}, fc);
	}
	return out;
}

std::pair<int, int> ThetaCalculus::weights(const FormWord &w) const
{
	int a = 0, b = 0;
	for (uint8_t g : w.func)
		(is_z(g) ? a : b)++;
	for (uint8_t g : w.letters)
		(is_z(g) ? a : b)++;
	return {a, b};
}

int ThetaCalculus::u1_weight(const FormWord &w) const
{
	auto [a, b] = weights(w);
	return a - b;
}

Form ThetaCalculus::project_pq(const Form &a, int p, int q) const
{
	Form r;
	for (auto &[w, c] : a.terms()) {
		int pp = 0, qq = 0;
		for (uint8_t g : w.letters)
			(is_z(g) ? pp : qq)++;
		if (pp == p && qq == q)
			r.add_term(w, c);
	}
	return r;
}

std::map<std::pair<int, int>, Form> ThetaCalculus::pq_components(const Form &a) const
{
	std::map<std::pair<int, int>, Form> r;
	for (auto &[w, c] : a.terms()) {
		int pp = 0, qq = 0;
		for (uint8_t g : w.letters)
			(is_z(g) ? pp : qq)++;
		r[{pp, qq}].add_term(w, c);
	}
	return r;
}

Form ThetaCalculus::partial(const Form &a) const
{
	Form r;
	for (auto &[pq, comp] : pq_components(a))
		r += project_pq(d(comp), pq.first + 1, pq.second);
	return r;
}

Form ThetaCalculus::dbar(const Form &a) const
{
	Form r;
	for (auto &[pq, comp] : pq_components(a))
		r += project_pq(d(comp), pq.first, pq.second + 1);
	return r;
}

std::map<std::pair<int, int>, Form> ThetaCalculus::degree_weight_components(const Form &a) const
{
	std::map<std::pair<int, int>, Form> r;
	for (auto &[w, c] : a.terms())
		r[{w.degree(), u1_weight(w)}].add_term(w, c);
	return r;
}

ThetaCalculus make_theta_calculus(ModelKind kind, int n)
{
	if (kind == ModelKind::Free)
		throw NcxError("make_theta_calculus: free model uses the universal calculus");
	ThetaCalculus c;
	c.kind = kind;
	c.n = n;
	for (int mu = 0; mu <= n; ++mu)
		c.pres.gens.push_back({mu, "z" + std::to_string(mu), 1, n + 1 + mu, GenKind::ZType});
	for (int mu = 0; mu <= n; ++mu)
		c.pres.gens.push_back({n + 1 + mu, "zb" + std::to_string(mu), -1, mu, GenKind::ZBarType});
	c.pres.finish();
	auto lam = [](int mu, int nu) { return Scalar::phase(mu, nu); };
	for (int mu = 0; mu <= n; ++mu)
		for (int nu = 0; nu <= n; ++nu) {
			// z^mu z^nu = L^{mu nu} z^nu z^mu, same for zbar pairs;
			// z^a zb^b = L^{b a} zb^b z^a (mixed swaps reverse the indices)
			c.pres.set_swap(c.z_id(mu), c.z_id(nu), lam(mu, nu));
			c.pres.set_swap(c.zbar_id(mu), c.zbar_id(nu), lam(mu, nu));
			c.pres.set_swap(c.z_id(mu), c.zbar_id(nu), lam(nu, mu));
			c.pres.set_swap(c.zbar_id(mu), c.z_id(nu), lam(nu, mu));
		}
	if (kind == ModelKind::ThetaSphere || kind == ModelKind::ThetaProjective) {
		// z^n zb^n -> 1 - sum_{mu<n} z^mu zb^mu
		Presentation::CentralRule rule;
		rule.lhs = {static_cast<uint8_t>(c.z_id(n)), static_cast<uint8_t>(c.zbar_id(n))};
		rule.rhs.emplace_back(Word{}, Scalar::one());
		for (int mu = 0; mu < n; ++mu)
			rule.rhs.emplace_back(Word{static_cast<uint8_t>(c.z_id(mu)), static_cast<uint8_t>(c.zbar_id(mu))},
			                      -Scalar::one());
		c.pres.central_rules.push_back(std::move(rule));

		Form r1, r2;
		for (int mu = 0; mu <= n; ++mu) {
			// dz^mu zb^mu = zb^mu dz^mu and z^mu dzb^mu stay put (same-index swaps are 1)
			r1.add_term(FormWord{{static_cast<uint8_t>(c.zbar_id(mu))}, {static_cast<uint8_t>(c.z_id(mu))}},
			            Scalar::one());
			r2.add_term(FormWord{{static_cast<uint8_t>(c.z_id(mu))}, {static_cast<uint8_t>(c.zbar_id(mu))}},
			            Scalar::one());
		}
		if (kind == ModelKind::ThetaSphere) {
			c.relations.push_back(r1 + r2);
		} else {
			c.relations.push_back(r1);
			c.relations.push_back(r2);
		}
	}
	return c;
}

} // namespace ncx
