#include "ncx/universal.hpp"

namespace ncx {

void UForm::add_term(const UWord &w, const Scalar &c)
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

UForm &UForm::operator+=(const UForm &o)
{
	for (auto &[w, c] : o.terms_)
		add_term(w, c);
	return *this;
}

UForm &UForm::operator-=(const UForm &o)
{
	for (auto &[w, c] : o.terms_)
		add_term(w, -c);
	return *this;
}

UForm UForm::operator-() const
{
	UForm r;
	for (auto &[w, c] : terms_)
		r.terms_[w] = -c;
	return r;
}

UForm operator*(const Scalar &c, const UForm &f)
{
	UForm r;
	if (c.is_zero())
		return r;
	for (auto &[w, t] : f.terms_)
		r.add_term(w, c * t);
	return r;
}

std::optional<int> UForm::homogeneous_degree() const
{
	std::optional<int> deg;
	for (auto &[w, c] : terms_) {
		int d = 0;
		for (auto l : w)
			d += l.is_d();
		if (!deg)
			deg = d;
		else if (*deg != d)
			return std::nullopt;
	}
	return deg ? deg : std::optional<int>(0);
}

int FreeCalculus::degree(const UWord &w) const
{
	int d = 0;
	for (auto l : w)
		d += l.is_d();
	return d;
}

UForm FreeCalculus::wedge(const UForm &a, const UForm &b) const
{
	UForm r;
	for (auto &[wa, ca] : a.terms())
		for (auto &[wb, cb] : b.terms()) {
			UWord w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			r.add_term(w, ca * cb);
		}
	return r;
}

UForm FreeCalculus::d(const UForm &a) const
{
	UForm r;
	for (auto &[w, c] : a.terms()) {
		int dleft = 0;
		for (size_t i = 0; i < w.size(); ++i) {
			if (w[i].is_d()) {
				++dleft;
				continue;
			}
			UWord nw = w;
			nw[i] = ULetter::dl(w[i].id());
			r.add_term(nw, (dleft % 2) ? -c : c);
		}
	}
	return r;
}

UForm FreeCalculus::star(const UForm &a) const
{
	UForm r;
	for (auto &[w, c] : a.terms()) {
		int k = degree(w);
		Scalar coeff = c.conj();
		if ((k * (k - 1) / 2) % 2 == 1)
			coeff = -coeff;
		UWord nw(w.rbegin(), w.rend());
		for (auto &l : nw)
			l = l.is_d() ? ULetter::dl(partner(l.id())) : ULetter::fn(partner(l.id()));
		r.add_term(nw, coeff);
	}
	return r;
}

UForm FreeCalculus::apply_J(const UForm &a) const
{
	// J(dx_k) = -dx_k^*, J(dx_k^*) = dx_k, extended as a degree-0 derivation
	UForm r;
	for (auto &[w, c] : a.terms()) {
		for (size_t i = 0; i < w.size(); ++i) {
			if (!w[i].is_d())
				continue;
			UWord nw = w;
			nw[i] = ULetter::dl(partner(w[i].id()));
			r.add_term(nw, is_x(w[i].id()) ? -c : c);
		}
	}
	return r;
}

UForm FreeCalculus::apply_JJ(const UForm &a) const
{
	UForm r;
	for (auto &[w, c] : a.terms()) {
		std::vector<size_t> dpos;
		for (size_t i = 0; i < w.size(); ++i)
			if (w[i].is_d())
				dpos.push_back(i);
		if (dpos.size() != 2)
			throw NcxError("apply_JJ: needs a homogeneous 2-form");
		UWord nw = w;
		Scalar coeff = c;
		for (size_t i : dpos) {
			coeff = is_x(w[i].id()) ? -coeff : coeff;
			nw[i] = ULetter::dl(partner(w[i].id()));
		}
		r.add_term(nw, coeff);
	}
	return r;
}

UForm FreeCalculus::project_pq(const UForm &a, int p, int q) const
{
	// Each d-letter expands in the J-eigenbasis
	//   holo_k = dx_k + i dx_k^*   (eigenvalue +i)
	//   anti_k = dx_k - i dx_k^*   (eigenvalue -i)
	// with dx_k = (holo+anti)/2 and dx_k^* = -i(holo-anti)/2. Keep the
	// assignments with p holo and q anti letters, then expand back.
	UForm r;
	Scalar half(GaussianRational(mpq_class(1, 2), 0));
	Scalar mihalf(GaussianRational(0, mpq_class(-1, 2)));
	for (auto &[w, c] : a.terms()) {
		std::vector<size_t> dpos;
		for (size_t i = 0; i < w.size(); ++i)
			if (w[i].is_d())
				dpos.push_back(i);
		if (static_cast<int>(dpos.size()) != p + q)
			continue;
		// iterate over holo/anti assignments
		for (uint32_t mask = 0; mask < (1u << dpos.size()); ++mask) {
			if (__builtin_popcount(mask) != p)
				continue;
			// coefficient of this eigen-assignment, then re-expand each
			// eigenletter into {dx, dx^*} with signs
			struct Item {
				size_t pos;
				bool holo;
			};
			std::vector<Item> items;
			Scalar base = c;
			for (size_t t = 0; t < dpos.size(); ++t) {
				bool holo = (mask >> t) & 1;
				int id = w[dpos[t]].id();
				// dx_k contributes 1/2 to either eigenletter; dx_k^*
				// contributes -i/2 to holo and +i/2 to anti
				if (is_x(id))
					base *= half;
				else
					base *= holo ? mihalf : -mihalf;
				items.push_back({dpos[t], holo});
			}
			// expand eigenletters back: holo_k = dx_k + i dx_k^*, anti_k = dx_k - i dx_k^*
			for (uint32_t back = 0; back < (1u << items.size()); ++back) {
				UWord nw = w;
				Scalar coeff = base;
				for (size_t t = 0; t < items.size(); ++t) {
					int base_id = w[items[t].pos].id();
					int xk = is_x(base_id) ? base_id : partner(base_id);
					bool star_letter = (back >> t) & 1;
					nw[items[t].pos] = ULetter::dl(star_letter ? partner(xk) : xk);
					if (star_letter)
						coeff *= items[t].holo ? Scalar::i() : -Scalar::i();
				}
				r.add_term(nw, coeff);
			}
		}
	}
	return r;
}

int permutation_reversal_sign(int n)
{
	// sign of (1 2 .. n) -> (n .. 2 1) by counting inversions
	int inv = n * (n - 1) / 2;
	return inv % 2 == 0 ? 1 : -1;
}

} // namespace ncx
