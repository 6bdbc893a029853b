#include "cohoparam/transfer.hpp"

#include "cohoparam/errors.hpp"

namespace cohoparam {

std::string to_string(Embedding e) {
  switch (e) {
    case Embedding::SpGL: return "sp-gl";
    case Embedding::SOGL: return "so-gl";
    case Embedding::SOOddInSOEven: return "so-odd-in-so-even";
    case Embedding::Diag: return "diag";
  }
  return "?";
}

Embedding parse_embedding(std::string_view tag) {
  for (Embedding e : {Embedding::SpGL, Embedding::SOGL, Embedding::SOOddInSOEven, Embedding::Diag})
    if (tag == to_string(e)) return e;
  throw InputError("unknown embedding '" + std::string(tag) + "'");
}

EmbeddingData embedding_data(Embedding tag, int n, int disc) {
  auto gl = [](int k) { return build_classical_dual(GroupDescriptor{GroupFamily::GLR, k, 0}); };
  switch (tag) {
    case Embedding::SpGL:
      if (n < 1) throw InputError("sp-gl needs n >= 1");
      return {tag, n, build_classical_dual(GroupDescriptor{GroupFamily::SO, n + 1, n}), gl(2 * n)};
    case Embedding::SOGL:
      if (n < 1) throw InputError("so-gl needs n >= 1");
      return {tag, n, build_classical_dual(GroupDescriptor{GroupFamily::Sp, 2 * n, 0}), gl(2 * n + 1)};
    case Embedding::SOOddInSOEven: {
      if (n < 2) throw InputError("so-odd-in-so-even needs n >= 2");
      // (p - q)/2 odd gives the nontrivial discriminant.
      GroupDescriptor t{GroupFamily::SO, disc ? n + 1 : n, disc ? n - 1 : n};
      return {tag, n, build_classical_dual(GroupDescriptor{GroupFamily::Sp, 2 * (n - 1), 0}), build_classical_dual(t)};
    }
    case Embedding::Diag:
      if (n < 1) throw InputError("diag needs n >= 1");
      return {tag, n, gl(n), build_classical_dual(GroupDescriptor{GroupFamily::GLC, n, 0})};
  }
  throw InputError("unknown embedding");
}

HalfIntVector push_forward(Embedding tag, const HalfIntVector& v) {
  std::vector<HalfInt> out(v.begin(), v.end());
  switch (tag) {
    case Embedding::SpGL:
      for (std::size_t i = v.size(); i-- > 0;) out.push_back(-v[i]);
      break;
    case Embedding::SOGL:
      out.push_back(0);
      for (std::size_t i = v.size(); i-- > 0;) out.push_back(-v[i]);
      break;
    case Embedding::SOOddInSOEven:
      out.push_back(0);
      break;
    case Embedding::Diag:
      out.insert(out.end(), v.begin(), v.end());
      break;
  }
  return HalfIntVector(std::move(out));
}

void check_rho_transport(const EmbeddingData& e) {
  HalfIntVector image = push_forward(e.tag, e.source.rho_check);
  if (image != e.target.rho_check)
    throw MathCheckError("rho_check transport failed for " + to_string(e.tag) + ": " + image.to_string() +
                         " != " + e.target.rho_check.to_string());
}

HalfIntVector transfer_highest_weight(Embedding tag, const HalfIntVector& lambda) {
  return push_forward(tag, lambda);
}

std::string TransferResult::target_text() const {
  if (target) return target->to_string();
  if (target_w) return target_w->to_string() + " | " + target_w->conjugate().to_string();
  return "";
}

namespace {

int infer_n(Embedding tag, int dim) {
  switch (tag) {
    case Embedding::SpGL:
      if (dim % 2) throw InputError("sp-gl needs an even-dimensional parameter");
      return dim / 2;
    case Embedding::SOGL:
      if (dim % 2 == 0) throw InputError("so-gl needs an odd-dimensional parameter");
      return (dim - 1) / 2;
    case Embedding::SOOddInSOEven:
      if (dim % 2 == 0) throw InputError("so-odd-in-so-even needs an odd-dimensional parameter");
      return (dim + 1) / 2;
    case Embedding::Diag: return dim;
  }
  return 0;
}

ComplexParameter restrict_to_wc(const GLParameter& p) {
  std::vector<ComplexAtom> out;
  for (const auto& a : p.atoms()) {
    if (a.is_quad()) {
      out.push_back({HalfInt(0), a.a});
    } else {
      out.push_back({HalfInt::from_twice(a.d), a.m});
      out.push_back({HalfInt::from_twice(-a.d), a.m});
    }
  }
  return ComplexParameter(std::move(out));
}

}  // namespace

TransferResult transfer_parameter(Embedding tag, const GLParameter& p, int n, int disc) {
  int inferred = infer_n(tag, p.dim());
  if (n != 0 && n != inferred)
    throw InputError("parameter of dimension " + std::to_string(p.dim()) + " does not fit " + to_string(tag) +
                     " with n = " + std::to_string(n));
  if (p.twist() != HalfInt(0)) throw InputError("transfer needs an untwisted parameter");
  if (disc != 0 && disc != 1) throw InputError("disc must be 0 or 1");

  SelfDualInfo info = classify_selfdual(p);
  switch (tag) {
    case Embedding::SpGL:
      if (info.type != SelfDualType::Symplectic) throw InputError(p.to_string() + " is not symplectic");
      break;
    case Embedding::SOGL:
    case Embedding::SOOddInSOEven:
      if (info.type != SelfDualType::Orthogonal || info.det != 0)
        throw InputError(p.to_string() + " is not valued in a special orthogonal group");
      break;
    case Embedding::Diag: break;
  }

  EmbeddingData e = embedding_data(tag, inferred, disc);
  TransferResult r;
  r.tag = tag;
  r.n = inferred;
  r.disc = disc;
  r.source = p;
  r.rho_source = e.source.rho_check;
  r.rho_target = e.target.rho_check;
  check_rho_transport(e);
  r.rho_ok = true;

  r.source_cohomological = is_cohomological_for(e.source, p);
  switch (tag) {
    case Embedding::SpGL:
    case Embedding::SOGL:
      r.target = GLParameter(p.atoms(), HalfInt(0), p.quad_count() > 0);
      r.target_cohomological = is_cohomological_for(e.target, *r.target);
      break;
    case Embedding::SOOddInSOEven: {
      std::vector<Atom> atoms = p.atoms();
      atoms.push_back(Atom::quad(disc, 1));
      r.target = GLParameter(std::move(atoms), HalfInt(0), true);
      r.target_cohomological = is_cohomological_for(e.target, *r.target);
      break;
    }
    case Embedding::Diag:
      r.target_w = restrict_to_wc(p);
      r.target_cohomological = is_cohomological_complex(*r.target_w);
      break;
  }
  if (r.source_cohomological && !r.target_cohomological)
    throw MathCheckError("cohomological " + p.to_string() + " transfers to non-cohomological " + r.target_text());
  return r;
}

}  // namespace cohoparam
