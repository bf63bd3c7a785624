#include <pgate/error.hpp>
#include <pgate/schreier.hpp>

#include <algorithm>

namespace pgate {
namespace {

struct Rewriter {
  int x0;
  const std::vector<int>& epsilon;
  // index[c][g]: kernel generator for coset c and parent generator g, -1 if
  // trivial.
  std::vector<std::vector<int>> index;

  // Returns the rewritten word and the final coset.
  std::pair<Word, int> run(const Word& w, int coset) const {
    std::vector<Letter> out;
    int c = coset;
    for (const Letter& l : w.letters()) {
      const int next = (c + epsilon[l.generator]) % 2;
      if (l.exponent > 0) {
        const int k = index[c][l.generator];
        if (k >= 0) out.push_back({k, 1});
      } else {
        const int k = index[next][l.generator];
        if (k >= 0) out.push_back({k, -1});
      }
      c = next;
    }
    return {Word(std::move(out)), c};
  }
};

Rewriter make_rewriter(int x0, const std::vector<int>& epsilon, int n) {
  Rewriter r{x0, epsilon, {std::vector<int>(n, -1), std::vector<int>(n, -1)}};
  int next = 0;
  for (int g = 0; g < n; ++g) {
    for (int c = 0; c < 2; ++c) {
      if (c == 0 && g == x0) continue;
      r.index[c][g] = next++;
    }
  }
  return r;
}

}  // namespace

Word KernelPresentation::rewrite(const Word& parent_word) const {
  const Rewriter r = make_rewriter(transversal, epsilon, static_cast<int>(epsilon.size()));
  auto [w, coset] = r.run(parent_word, 0);
  if (coset != 0) {
    throw ValidationError("word has odd epsilon-weight and is not in the kernel");
  }
  return w;
}

KernelPresentation reidemeister_schreier_index2(const GroupPresentation& g,
                                                const std::vector<int>& epsilon) {
  const int n = g.num_generators();
  if (static_cast<int>(epsilon.size()) != n) {
    throw ValidationError("epsilon needs one value per generator");
  }
  int x0 = -1;
  for (int i = 0; i < n; ++i) {
    if (epsilon[i] % 2 != 0) {
      x0 = i;
      break;
    }
  }
  if (x0 < 0) throw ValidationError("epsilon is trivial; no index-2 kernel to take");

  KernelPresentation k;
  k.transversal = x0;
  for (int e : epsilon) k.epsilon.push_back(((e % 2) + 2) % 2);
  const Rewriter r = make_rewriter(x0, k.epsilon, n);
  const Word t1 = Word::generator(x0);
  const Word transversal[2] = {Word(), t1};

  for (int gen = 0; gen < n; ++gen) {
    for (int c = 0; c < 2; ++c) {
      if (r.index[c][gen] < 0) continue;
      std::string name = g.generators[gen] + std::to_string(c);
      while (std::find(k.group.generators.begin(), k.group.generators.end(), name) !=
             k.group.generators.end()) {
        name += "_";
      }
      k.group.generators.push_back(name);
      const int target = (c + k.epsilon[gen]) % 2;
      k.inclusion.push_back(transversal[c] * Word::generator(gen) *
                            transversal[target].inverse());
    }
  }

  for (const Word& rel : g.relators) {
    for (int c = 0; c < 2; ++c) {
      auto [w, end] = r.run(rel, c);
      if (end != c) {
        throw ValidationError("relator " + g.word_to_string(rel) +
                              " has odd epsilon-weight");
      }
      k.group.relators.push_back(w);
    }
  }

  if (g.kind == GroupKind::QuotientKnot) {
    k.group.kind = GroupKind::SphereKnot;
    if (g.meridian && g.longitude) {
      k.group.meridian = k.rewrite(g.meridian->pow(2) * *g.longitude);
      k.group.longitude = k.rewrite(*g.longitude);
    }
  } else {
    k.group.kind = GroupKind::Generic;
  }
  return k;
}

KernelPresentation reidemeister_schreier_index2(const GroupPresentation& g) {
  return reidemeister_schreier_index2(g, abelianize(g).epsilon);
}

Abelianization restrict_abelianization(const Abelianization& parent,
                                       const KernelPresentation& kernel) {
  Abelianization out;
  out.h1 = homology(kernel.group);
  if (!out.h1.infinite_cyclic()) {
    throw ValidationError("kernel has H_1 = " + out.h1.to_string() +
                          "; the index-2 cover of a quotient knot has H_1 = Z");
  }
  for (const Word& w : kernel.inclusion) {
    const long v = parent.evaluate(w);
    if (v % 2 != 0) throw ValidationError("inclusion word has odd weight");
    out.values.push_back(v / 2);
    out.epsilon.push_back(static_cast<int>((((v / 2) % 2) + 2) % 2));
  }
  return out;
}

}  // namespace pgate
