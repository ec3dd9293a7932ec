#include "symloop/words.hpp"

#include <algorithm>
#include <sstream>

namespace symloop::words {

Word reduced(Word w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclically_reduced(Word w) {
  w = reduced(std::move(w));
  size_t i = 0, j = w.size();
  while (j > i + 1 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduced(std::move(out));
}

Word conjugate(const Word& u, const Word& w) {
  return concat(concat(inverse(u), w), u);
}

static int letter_key(int l) { return gen_of(l) * 2 + (l < 0 ? 1 : 0); }

Word canonical_loop(const Word& w) {
  Word c = cyclically_reduced(w);
  if (c.empty()) return c;
  auto keyed = [](const Word& v) {
    std::vector<int> k(v.size());
    std::transform(v.begin(), v.end(), k.begin(), letter_key);
    return k;
  };
  Word best;
  std::vector<int> best_key;
  for (Word base : {c, inverse(c)}) {
    for (size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      auto k = keyed(rot);
      if (best.empty() || k < best_key) {
        best = std::move(rot);
        best_key = std::move(k);
      }
    }
  }
  return best;
}

std::vector<long> exponent_vector(const Word& w, int ngens) {
  std::vector<long> e(ngens, 0);
  for (int l : w) e[gen_of(l)] += l > 0 ? 1 : -1;
  return e;
}

std::string show(const Word& w, const std::vector<std::string>& gen_names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << gen_names.at(gen_of(w[i]));
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

Word parse(const std::string& s, const std::vector<std::string>& gen_names) {
  Word w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    auto it = std::find(gen_names.begin(), gen_names.end(), tok);
    if (it == gen_names.end())
      throw std::runtime_error("unknown generator: " + tok);
    w.push_back(letter((int)(it - gen_names.begin()), inv));
  }
  return w;
}

Endo Endo::identity(int ngens) {
  Endo e;
  e.ngens = ngens;
  for (int g = 0; g < ngens; ++g) e.img.push_back({letter(g)});
  return e;
}

Word Endo::apply(const Word& w, size_t max_len) const {
  Word out;
  for (int l : w) {
    const Word& rep = img.at(gen_of(l));
    if (l > 0) {
      for (int x : rep) {
        if (!out.empty() && out.back() == -x)
          out.pop_back();
        else
          out.push_back(x);
      }
    } else {
      for (auto it = rep.rbegin(); it != rep.rend(); ++it) {
        if (!out.empty() && out.back() == *it)
          out.pop_back();
        else
          out.push_back(-*it);
      }
    }
    if (out.size() > max_len) throw BudgetError("word length budget exceeded");
  }
  return out;
}

Endo Endo::compose(const Endo& after, const Endo& before) {
  Endo e;
  e.ngens = before.ngens;
  for (const auto& w : before.img) e.img.push_back(after.apply(w));
  return e;
}

MappingClass MappingClass::compose(const MappingClass& after,
                                   const MappingClass& before) {
  return {after.name + "*" + before.name, Endo::compose(after.fwd, before.fwd),
          Endo::compose(before.bwd, after.bwd)};
}

void MappingClass::check() const {
  Endo id = Endo::identity(fwd.ngens);
  require(Endo::compose(bwd, fwd) == id && Endo::compose(fwd, bwd) == id,
          "mapping class " + name + ": inverse check failed");
}

}  // namespace symloop::words
