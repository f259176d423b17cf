#include "braidmon/structural/struct_elem.hpp"

#include "braidmon/error.hpp"
#include "braidmon/words/text.hpp"

namespace braidmon {

namespace {

// Product in G' = K x| V: moving (a1, b1) right across u2 adds one w per y
// letter passing a and per x letter passing b.
StructElem DerivedProduct(const StructElem& p, const StructElem& q) {
  const int shift = p.b() * q.u().ExponentSum(1) + p.a() * q.u().ExponentSum(2);
  return StructElem(p.u() * q.u(), p.w() + q.w() + shift, p.a() + q.a(), p.b() + q.b(), 0);
}

StructElem DerivedInverse(const StructElem& p) {
  const StructElem q(p.u().Inverse(), 0, p.a(), p.b(), 0);
  return StructElem(q.u(), DerivedProduct(p, q).w(), p.a(), p.b(), 0);
}

// Images of x, y, w, a, b under conjugation by g (forward) or g^-1.
const std::vector<StructElem>& ActionImages(bool forward) {
  static const std::vector<StructElem> fwd = [] {
    const StructElem x = StructElem::X(), y = StructElem::Y(), a = StructElem::A(), b = StructElem::B();
    return std::vector<StructElem>{DerivedInverse(y), DerivedProduct(DerivedProduct(y, x), b), StructElem::W(), b,
                                   DerivedProduct(a, b)};
  }();
  static const std::vector<StructElem> back = [] {
    const StructElem x = StructElem::X(), y = StructElem::Y(), a = StructElem::A(), b = StructElem::B();
    return std::vector<StructElem>{DerivedProduct(DerivedProduct(x, y), a), DerivedInverse(x), StructElem::W(),
                                   DerivedProduct(a, b), a};
  }();
  return forward ? fwd : back;
}

StructElem ApplyAction(const StructElem& p, bool forward) {
  const auto& img = ActionImages(forward);
  StructElem r;
  for (int l : p.u().letters()) r = DerivedProduct(r, l > 0 ? img[l - 1] : DerivedInverse(img[-l - 1]));
  if (p.w()) r = DerivedProduct(r, img[2]);
  if (p.a()) r = DerivedProduct(r, img[3]);
  if (p.b()) r = DerivedProduct(r, img[4]);
  return r;
}

}  // namespace

StructElem::StructElem(FreeWord u, int ew, int ea, int eb, long k)
    : u_(std::move(u)), ew_(((ew % 2) + 2) % 2), ea_(((ea % 2) + 2) % 2), eb_(((eb % 2) + 2) % 2), k_(k) {
  if (u_.rank() != 2) throw InputError("structural words live in the free group on x, y");
}

StructElem StructElem::X() { return StructElem(FreeWord::Generator(2, 1), 0, 0, 0, 0); }
StructElem StructElem::Y() { return StructElem(FreeWord::Generator(2, 2), 0, 0, 0, 0); }
StructElem StructElem::W() { return StructElem(FreeWord(2), 1, 0, 0, 0); }
StructElem StructElem::A() { return StructElem(FreeWord(2), 0, 1, 0, 0); }
StructElem StructElem::B() { return StructElem(FreeWord(2), 0, 0, 1, 0); }
StructElem StructElem::G() { return StructElem(FreeWord(2), 0, 0, 0, 1); }

StructElem StructElem::ConjugatedByG(long times) const {
  StructElem r(u_, ew_, ea_, eb_, 0);
  for (long i = 0; i < (times < 0 ? -times : times); ++i) r = ApplyAction(r, times > 0);
  return r;
}

StructElem operator*(const StructElem& p, const StructElem& q) {
  // p' g^k1 q' g^k2 = p' (g^k1 q' g^-k1) g^(k1+k2)
  const StructElem q_derived(q.u(), q.w(), q.a(), q.b(), 0);
  StructElem r = DerivedProduct(StructElem(p.u(), p.w(), p.a(), p.b(), 0), q_derived.ConjugatedByG(p.k()));
  return StructElem(r.u(), r.w(), r.a(), r.b(), p.k() + q.k());
}

StructElem StructElem::Inverse() const {
  // (p' g^k)^-1 = g^-k p'^-1 = (g^-k p'^-1 g^k) g^-k
  const StructElem inv = DerivedInverse(StructElem(u_, ew_, ea_, eb_, 0)).ConjugatedByG(-k_);
  return StructElem(inv.u(), inv.w(), inv.a(), inv.b(), -k_);
}

StructElem StructElem::Power(long e) const {
  StructElem base = e < 0 ? Inverse() : *this, r;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
  return r;
}

std::string StructElem::ToString() const {
  std::string out = FormatFreeWord(u_, {"x", "y"});
  auto add = [&out](const std::string& part) {
    if (!out.empty()) out += ' ';
    out += part;
  };
  if (ew_) add("w");
  if (ea_) add("a");
  if (eb_) add("b");
  if (k_ == 1) add("g");
  else if (k_ != 0) add("g^" + std::to_string(k_));
  return out.empty() ? "1" : out;
}

StructElem Commutator(const StructElem& p, const StructElem& q) { return p * q * p.Inverse() * q.Inverse(); }

StructElem EvaluateWord(const FreeWord& w, const std::vector<StructElem>& images) {
  if (static_cast<size_t>(w.rank()) > images.size()) throw InputError("too few generator images");
  StructElem r;
  for (int l : w.letters()) r = r * (l > 0 ? images[l - 1] : images[-l - 1].Inverse());
  return r;
}

}  // namespace braidmon
