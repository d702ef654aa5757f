// Walks a dyadic function algebra through norms, ideals, approximation,
// idempotents, and a ground-field extension.
#include <clopen/clopen.hpp>

#include <cstdio>

using namespace clopen;

int main() {
  FiniteSpace x = FiniteSpace::discrete({"a", "b", "c", "d"});
  ValuedField q2 = ValuedField::padic(2);
  BoundedFunction f(x, q2,
                    {Scalar::from_int(q2, 1), Scalar::from_int(q2, 3),
                     Scalar::from_int(q2, 4), Scalar::from_int(q2, 12)});

  std::printf("f = (1, 3, 4, 12) over %s\n", q2.describe().c_str());
  std::printf("sup norm %s, algebraic norm %s\n",
              sup_norm(f).to_string().c_str(),
              algebraic_norm(f).to_string().c_str());

  std::printf("\nper-point seminorms and quotient norms agree:\n");
  for (const Ideal& m : enumerate_max_ideals(x, q2)) {
    Ultrafilter uf = uf_from_ideal(m);
    std::printf("  at %s: seminorm %s, quotient norm %s\n",
                x.set_name(m.zero_mask).c_str(),
                uf_seminorm(f, uf).to_string().c_str(),
                quotient_norm(f, m).to_string().c_str());
  }

  Ideal m_a = enumerate_max_ideals(x, q2).front();
  BoundedFunction g = f - BoundedFunction::constant(x, f.at("a"));
  std::printf("\nf minus its value at a lies in the ideal at a: %s\n",
              m_a.contains(g) ? "yes" : "no");
  std::printf("norm of constant + ideal part splits as a maximum: %s\n",
              orthogonal_decomposition_check(f.at("a"), g, m_a) ? "yes" : "no");

  ApproxResult res = locally_constant_approx(f, AbsValue::one());
  std::printf("\napproximation within 1: g = (");
  for (std::size_t i = 0; i < res.g.values.size(); ++i)
    std::printf("%s%s", i ? ", " : "", scalar_to_string(res.g.values[i]).c_str());
  std::printf(") on %zu blocks, error %s\n", res.blocks.blocks.size(),
              sup_norm(f - res.g).to_string().c_str());

  IdempotentWitness w = idempotent_decomposition(f);
  std::printf("f as an idempotent combination:");
  for (const IdempotentTerm& t : w.terms)
    std::printf("  %s * 1_%s", scalar_to_string(t.coefficient).c_str(),
                x.set_name(t.support).c_str());
  std::printf("\n");

  TensorExtension ext = TensorExtension::qi_over_q();
  ValuedField q = ext.base;
  FiniteSpace two = FiniteSpace::discrete({"a", "b"});
  BoundedFunction g1(two, q, {Scalar::from_int(q, 1), Scalar::zero(q)});
  BoundedFunction g2(two, q, {Scalar::zero(q), Scalar::from_int(q, 1)});
  TensorElement t(ext, two,
                  {{Scalar::one(ext.field), g1},
                   {Scalar::from_gaussian(ext.field, 0, 1), g2}});
  std::printf("\nextending scalars from Q to Q(i): tensor norm %s, pointwise sup %s, isometry %s\n",
              tensor_norm(t).to_string().c_str(),
              sup_norm(apply_extension(t)).to_string().c_str(),
              tensor_isometry_check(t) ? "yes" : "no");
  return 0;
}
