#include "fs5/fueter_ops.hpp"

#include <algorithm>

namespace fs5 {

NormalWord normalize(const OpWord& w) {
  int k = 0, a = 0, b = 0;
  for (Letter l : w) {
    if (l == Letter::D) ++a;
    else if (l == Letter::Dbar) ++b;
    else ++k;
  }
  const int m = std::min(a, b);
  return {k + m, a - m, b - m};
}

OpWord expand(const NormalWord& n) {
  OpWord w;
  w.insert(w.end(), n.delta, Letter::Delta);
  w.insert(w.end(), n.d, Letter::D);
  w.insert(w.end(), n.dbar, Letter::Dbar);
  return w;
}

std::string word_name(const NormalWord& n) {
  std::string s;
  auto part = [&](const char* sym, int p) {
    if (p == 0) return;
    s += sym;
    if (p > 1) s += "^" + std::to_string(p);
  };
  part("Delta", n.delta);
  part("D", n.d);
  part("Dbar", n.dbar);
  return s.empty() ? "1" : s;
}

OpWord word_of(KernelKind k) {
  switch (k) {
    case KernelKind::Cauchy: return {};
    case KernelKind::F5: return {Letter::Delta, Letter::Delta};
    case KernelKind::D: return {Letter::D};
    case KernelKind::Delta: return {Letter::Delta};
    case KernelKind::DeltaD: return {Letter::Delta, Letter::D};
    case KernelKind::Dbar: return {Letter::Dbar};
    case KernelKind::Dbar2: return {Letter::Dbar, Letter::Dbar};
    case KernelKind::D2: return {Letter::D, Letter::D};
    case KernelKind::DeltaDbar: return {Letter::Delta, Letter::Dbar};
  }
  return {};
}

const char* kind_name(KernelKind k) {
  switch (k) {
    case KernelKind::Cauchy: return "Cauchy";
    case KernelKind::F5: return "F5";
    case KernelKind::D: return "D";
    case KernelKind::Delta: return "Delta";
    case KernelKind::DeltaD: return "DeltaD";
    case KernelKind::Dbar: return "Dbar";
    case KernelKind::Dbar2: return "Dbar2";
    case KernelKind::D2: return "D2";
    case KernelKind::DeltaDbar: return "DeltaDbar";
  }
  return "?";
}

int kind_degree(KernelKind k) { return normalize(word_of(k)).order(); }

const char* space_name(FineSpace f) {
  switch (f) {
    case FineSpace::AM: return "AM";
    case FineSpace::AH: return "AH";
    case FineSpace::ABH: return "ABH";
    case FineSpace::ACH1: return "ACH1";
    case FineSpace::AntiACH1: return "AntiACH1";
    case FineSpace::AP2: return "AP2";
    case FineSpace::AP3: return "AP3";
    case FineSpace::APC12: return "APC12";
    case FineSpace::SH: return "SH";
  }
  return "?";
}

NormalWord annihilator(FineSpace f) {
  switch (f) {
    case FineSpace::AM: return {0, 1, 0};
    case FineSpace::AH: return {1, 0, 0};
    case FineSpace::ABH: return {2, 0, 0};
    case FineSpace::ACH1: return {1, 1, 0};
    case FineSpace::AntiACH1: return {1, 0, 1};
    case FineSpace::AP2: return {0, 2, 0};
    case FineSpace::AP3: return {0, 3, 0};
    case FineSpace::APC12: return {1, 2, 0};
    case FineSpace::SH: return {2, 1, 0};
  }
  return {};
}

std::optional<FineSpace> space_of_annihilator(const NormalWord& n) {
  for (FineSpace f : kAllSpaces)
    if (annihilator(f) == n) return f;
  return std::nullopt;
}

const char* block_name(Block b) {
  switch (b) {
    case Block::D: return "D";
    case Block::Dbar: return "Dbar";
    case Block::Delta: return "Delta";
    case Block::D2: return "D2";
    case Block::Dbar2: return "Dbar2";
  }
  return "?";
}

NormalWord block_word(Block b) {
  switch (b) {
    case Block::D: return {0, 1, 0};
    case Block::Dbar: return {0, 0, 1};
    case Block::Delta: return {1, 0, 0};
    case Block::D2: return {0, 2, 0};
    case Block::Dbar2: return {0, 0, 2};
  }
  return {};
}

std::optional<FineSpace> prefix_label(const NormalWord& prefix) {
  const int pd = prefix.delta + prefix.d;
  const int pdb = prefix.delta + prefix.dbar;
  if (pd > 2 || pdb > 2) return std::nullopt;
  OpWord w(3 - pd, Letter::D);
  w.insert(w.end(), 2 - pdb, Letter::Dbar);
  return space_of_annihilator(normalize(w));
}

namespace {

void grow(std::vector<Block>& cur, int d, int db, bool coarse, std::vector<std::vector<Block>>& out) {
  if (d == 2 && db == 2) {
    out.push_back(cur);
    return;
  }
  const Block all[] = {Block::D, Block::Dbar, Block::Delta, Block::D2, Block::Dbar2};
  for (Block b : all) {
    if (!coarse && b != Block::D && b != Block::Dbar) continue;
    const NormalWord n = block_word(b);
    const int nd = d + n.delta + n.d, ndb = db + n.delta + n.dbar;
    if (nd > 2 || ndb > 2) continue;
    cur.push_back(b);
    grow(cur, nd, ndb, coarse, out);
    cur.pop_back();
  }
}

Factorization label(const std::vector<Block>& word) {
  Factorization f{word, {}};
  OpWord prefix;
  for (Block b : word) {
    const OpWord piece = expand(block_word(b));
    prefix.insert(prefix.end(), piece.begin(), piece.end());
    f.labels.push_back(*prefix_label(normalize(prefix)));
  }
  return f;
}

bool dirac_only(const std::vector<Block>& w) {
  return std::all_of(w.begin(), w.end(), [](Block b) { return b == Block::D || b == Block::Dbar; });
}

}  // namespace

std::vector<Factorization> enumerate_factorizations(bool coarse) {
  std::vector<std::vector<Block>> words;
  std::vector<Block> cur;
  grow(cur, 0, 0, false, words);
  if (coarse) {
    std::vector<std::vector<Block>> all;
    grow(cur, 0, 0, true, all);
    for (auto& w : all)
      if (!dirac_only(w)) words.push_back(std::move(w));
  }
  std::vector<Factorization> out;
  for (const auto& w : words) out.push_back(label(w));
  return out;
}

const char* system_name(VekuaSystem s) {
  switch (s) {
    case VekuaSystem::AntiCliffordian: return "AntiCliffordian";
    case VekuaSystem::BiHarmonic: return "BiHarmonic";
    case VekuaSystem::Poly3: return "Poly3";
    case VekuaSystem::Cliffordian1: return "Cliffordian1";
    case VekuaSystem::Harmonic: return "Harmonic";
    case VekuaSystem::Poly2: return "Poly2";
    case VekuaSystem::PolyCliffordian12: return "PolyCliffordian12";
  }
  return "?";
}

FineSpace system_space(VekuaSystem s) {
  switch (s) {
    case VekuaSystem::AntiCliffordian: return FineSpace::AntiACH1;
    case VekuaSystem::BiHarmonic: return FineSpace::ABH;
    case VekuaSystem::Poly3: return FineSpace::AP3;
    case VekuaSystem::Cliffordian1: return FineSpace::ACH1;
    case VekuaSystem::Harmonic: return FineSpace::AH;
    case VekuaSystem::Poly2: return FineSpace::AP2;
    case VekuaSystem::PolyCliffordian12: return FineSpace::APC12;
  }
  return FineSpace::SH;
}

}  // namespace fs5
