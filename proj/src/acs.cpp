#include "ncx/acs.hpp"

namespace ncx {

ThetaACS ThetaACS::standard(const ThetaCalculus &c)
{
	ThetaACS j;
	j.action.resize(c.num_gens());
	for (int id = 0; id < c.num_gens(); ++id)
		j.action[id] = (c.is_z(id) ? Scalar::i() : -Scalar::i()) * c.gen_form(id);
	return j;
}

ThetaACS ThetaACS::broken_axiom(const ThetaCalculus &c)
{
	ThetaACS j = standard(c);
	int id = c.zbar_id(0);
	j.action[id] = Scalar::i() * c.gen_form(id);
	return j;
}

ThetaACS ThetaACS::broken_nonintegrable(const ThetaCalculus &c)
{
	if (c.n < 1)
		throw NcxError("broken_nonintegrable: needs n >= 1");
	ThetaACS j = standard(c);
	// J dz^1 = i dz^1 + zb^1 dzb^0; completed so that J^2 = -1 and
	// J(xi^*) = (J xi)^* still hold, but the Nijenhuis tests do not vanish.
	Form extra(FormWord{{static_cast<uint8_t>(c.zbar_id(1))}, {static_cast<uint8_t>(c.zbar_id(0))}},
	           Scalar::one());
	j.action[c.z_id(1)] += extra;
	// (zb^1 dzb^0)^* computed by the calculus itself keeps conventions straight
	j.action[c.zbar_id(1)] += c.star(extra);
	return j;
}

Form acs_apply(const ThetaCalculus &c, const ThetaACS &j, const Form &a)
{
	Form out;
	for (auto &[w, coeff] : a.terms()) {
		for (size_t i = 0; i < w.letters.size(); ++i) {
			Form prefix(FormWord{w.func, Word(w.letters.begin(), w.letters.begin() + i)}, coeff);
			Form suffix(FormWord{{}, Word(w.letters.begin() + i + 1, w.letters.end())}, Scalar::one());
			out += c.wedge(c.wedge(prefix, j.action[w.letters[i]]), suffix);
		}
	}
	return out;
}

Form acs_apply_pair(const ThetaCalculus &c, const ThetaACS &j, const Form &a)
{
	Form out;
	for (auto &[w, coeff] : a.terms()) {
		if (w.letters.size() != 2)
			throw NcxError("acs_apply_pair: needs a homogeneous 2-form");
		Form head(FormWord{w.func, {}}, coeff);
		out += c.wedge(c.wedge(head, j.action[w.letters[0]]), j.action[w.letters[1]]);
	}
	return out;
}

} // namespace ncx
