#include "bowditch/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace bowditch {

FreeWord::FreeWord(std::vector<std::int8_t> letters)
    : letters_(std::move(letters)) {
  for (auto x : letters_)
    if (x == 0 || x < -3 || x > 3) throw std::invalid_argument("bad letter");
}

FreeWord FreeWord::generator(int g) {
  return FreeWord({static_cast<std::int8_t>(g)});
}

FreeWord FreeWord::parse(const std::string& s) {
  std::vector<std::int8_t> out;
  for (std::size_t p = 0; p < s.size();) {
    unsigned char ch = static_cast<unsigned char>(s[p]);
    if (std::isspace(ch) || ch == '*' || ch == '.') {
      ++p;
      continue;
    }
    int g;
    if (ch >= 'A' && ch <= 'C') g = ch - 'A' + 1;
    else if (ch >= 'a' && ch <= 'c') g = -(ch - 'a' + 1);
    else if (ch == '1' && s.size() == 1) return FreeWord();
    else throw std::invalid_argument("bad word '" + s + "'");
    ++p;
    if (s.compare(p, 3, "^-1") == 0) {
      g = -g;
      p += 3;
    } else if (s.compare(p, 5, "⁻¹") == 0) {
      g = -g;
      p += 5;
    }
    out.push_back(static_cast<std::int8_t>(g));
  }
  return reduce(FreeWord(std::move(out)));
}

bool FreeWord::is_reduced() const {
  for (std::size_t k = 1; k < letters_.size(); ++k)
    if (letters_[k] == -letters_[k - 1]) return false;
  return true;
}

bool FreeWord::is_cyclically_reduced() const {
  return is_reduced() &&
         (letters_.size() < 2 || letters_.front() != -letters_.back());
}

FreeWord FreeWord::inverse() const {
  std::vector<std::int8_t> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = static_cast<std::int8_t>(-x);
  FreeWord w;
  w.letters_ = std::move(out);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord w;
  w.letters_ = letters_;
  for (auto x : o.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -x) w.letters_.pop_back();
    else w.letters_.push_back(x);
  }
  return w;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (auto x : letters_)
    s.push_back(x > 0 ? static_cast<char>('A' + x - 1)
                      : static_cast<char>('a' - x - 1));
  return s;
}

FreeWord reduce(const FreeWord& w) { return FreeWord() * w; }

FreeWord cyclic_reduce(const FreeWord& w) {
  std::vector<std::int8_t> l = reduce(w).letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<std::int8_t>(l.begin() + lo, l.begin() + hi));
}

Automorphism::Automorphism()
    : images_{FreeWord::generator(1), FreeWord::generator(2),
              FreeWord::generator(3)} {}

Automorphism::Automorphism(FreeWord a, FreeWord b, FreeWord c)
    : images_{reduce(a), reduce(b), reduce(c)} {}

FreeWord Automorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (auto x : w.letters())
    out = out * (x > 0 ? images_[x - 1] : images_[-x - 1].inverse());
  return out;
}

std::string Automorphism::str() const {
  return "(A->" + images_[0].str() + ", B->" + images_[1].str() +
         ", C->" + images_[2].str() + ")";
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism(f.apply(g.image(1)), f.apply(g.image(2)),
                      f.apply(g.image(3)));
}

Automorphism conjugation(const FreeWord& w) {
  FreeWord wi = w.inverse();
  return Automorphism(w * FreeWord::generator(1) * wi,
                      w * FreeWord::generator(2) * wi,
                      w * FreeWord::generator(3) * wi);
}

Automorphism named_involution(Involution which) {
  auto P = [](const char* s) { return FreeWord::parse(s); };
  switch (which) {
    case Involution::A: return {P("CbacB"), P("b"), P("c")};
    case Involution::B: return {P("a"), P("AcbaC"), P("c")};
    case Involution::C: return {P("a"), P("b"), P("BacbA")};
    case Involution::D: return {P("a"), P("b"), P("c")};
    case Involution::X: return {P("a"), P("cbC"), P("c")};
    case Involution::Y: return {P("a"), P("b"), P("acA")};
    case Involution::Z: return {P("baB"), P("b"), P("c")};
  }
  throw std::invalid_argument("unknown involution");
}

std::string to_string(Magnus k) {
  switch (k) {
    case Magnus::K12: return "K12";
    case Magnus::K23: return "K23";
    case Magnus::K31: return "K31";
    case Magnus::K123: return "K123";
    case Magnus::K231: return "K231";
    case Magnus::K312: return "K312";
  }
  return "?";
}

static void check_gen(int g) {
  if (g < 1 || g > 3) throw std::invalid_argument("generator out of range");
}

Automorphism magnus_conjugation(int i, int j) {
  check_gen(i);
  check_gen(j);
  std::array<FreeWord, 3> im = {FreeWord::generator(1), FreeWord::generator(2),
                                FreeWord::generator(3)};
  FreeWord aj = FreeWord::generator(j);
  im[i - 1] = aj * im[i - 1] * aj.inverse();
  return {im[0], im[1], im[2]};
}

Automorphism magnus_commutator(int i, int j, int k) {
  check_gen(i);
  check_gen(j);
  check_gen(k);
  std::array<FreeWord, 3> im = {FreeWord::generator(1), FreeWord::generator(2),
                                FreeWord::generator(3)};
  FreeWord u = FreeWord::generator(j), v = FreeWord::generator(k);
  im[i - 1] = im[i - 1] * u * v * u.inverse() * v.inverse();
  return {im[0], im[1], im[2]};
}

Automorphism magnus_generator(Magnus which) {
  switch (which) {
    case Magnus::K12: return magnus_conjugation(1, 2);
    case Magnus::K23: return magnus_conjugation(2, 3);
    case Magnus::K31: return magnus_conjugation(3, 1);
    case Magnus::K123: return magnus_commutator(1, 2, 3);
    case Magnus::K231: return magnus_commutator(2, 3, 1);
    case Magnus::K312: return magnus_commutator(3, 1, 2);
  }
  throw std::invalid_argument("unknown Magnus generator");
}

Automorphism involution_product(const std::string& letters) {
  Automorphism out;
  // Left factor first: X -> t_n(...t_1(X)).
  for (char ch : letters)
    out = compose(named_involution(involution_from_char(ch)), out);
  return out;
}

std::string magnus_identity(Magnus which) {
  switch (which) {
    case Magnus::K12: return "zd";
    case Magnus::K23: return "xd";
    case Magnus::K31: return "yd";
    case Magnus::K123: return "dxaz";
    case Magnus::K231: return "dybx";
    case Magnus::K312: return "dzcy";
  }
  throw std::invalid_argument("unknown Magnus generator");
}

static bool conjugates(const Automorphism& f, const Automorphism& g,
                       const FreeWord& w) {
  FreeWord wi = w.inverse();
  for (int x = 1; x <= 3; ++x)
    if (f.image(x) != w * g.image(x) * wi) return false;
  return true;
}

std::optional<FreeWord> equal_in_out(const Automorphism& f,
                                     const Automorphism& g, int radius) {
  // Prefixes of f(X) g(X)^-1 are the natural candidates.
  std::set<FreeWord> tried;
  for (int x = 1; x <= 3; ++x) {
    FreeWord q = f.image(x) * g.image(x).inverse();
    std::vector<std::int8_t> pre;
    for (std::size_t n = 0; n <= q.length(); ++n) {
      FreeWord w(pre);
      if (tried.insert(w).second && conjugates(f, g, w)) return w;
      if (n < q.length()) pre.push_back(q.letters()[n]);
    }
  }
  // Breadth-limited search over reduced words.
  std::vector<FreeWord> layer = {FreeWord()};
  for (int len = 0; len <= radius; ++len) {
    std::vector<FreeWord> next;
    for (const FreeWord& w : layer) {
      if (!tried.count(w) && conjugates(f, g, w)) return w;
      if (len == radius) continue;
      for (int x : {1, 2, 3, -1, -2, -3}) {
        if (!w.empty() && w.letters().back() == -x) continue;
        auto l = w.letters();
        l.push_back(static_cast<std::int8_t>(x));
        next.emplace_back(std::move(l));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace bowditch
