#include "fpbl/dyck.hpp"

#include <stdexcept>
#include <utility>

namespace fpbl {

bool DyckPath::valid() const noexcept {
  long h = 0;
  for (auto s : steps) {
    if (s != 1 && s != -1) return false;
    h += s;
    if (h < 0) return false;
  }
  return h == 0;
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps.size());
  for (auto s : steps) out.push_back(s > 0 ? 'U' : 'D');
  return out;
}

DyckPath DyckPath::parse(std::string_view text) {
  DyckPath p;
  for (char c : text) {
    if (c == 'U' || c == 'u') {
      p.steps.push_back(1);
    } else if (c == 'D' || c == 'd') {
      p.steps.push_back(-1);
    } else {
      throw std::invalid_argument("Dyck path: unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (!p.valid()) throw std::invalid_argument("not a Dyck path: " + std::string(text));
  return p;
}

DyckPath uniform_dyck(std::size_t n, RandomSource& rng) {
  const std::size_t len = 2 * n + 1;
  // Sequential selection: each step is up with probability ups_left / left.
  std::vector<std::int8_t> word(len);
  std::uint64_t ups = n + 1;
  for (std::size_t i = 0; i < len; ++i) {
    const bool up = rng.below(len - i) < ups;
    word[i] = up ? 1 : -1;
    ups -= up;
  }
  long h = 0, low = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (h <= low) {
      low = h;
      start = i;
    }
    h += word[i];
  }
  DyckPath p;
  p.steps.reserve(2 * n);
  for (std::size_t i = 1; i < len; ++i) p.steps.push_back(word[(start + i) % len]);
  return p;
}

std::vector<DyckPath> all_dyck_paths(std::size_t n) {
  std::vector<DyckPath> out;
  DyckPath cur;
  cur.steps.reserve(2 * n);
  auto rec = [&](auto&& self, std::size_t ups, std::size_t downs) -> void {
    if (ups == n && downs == n) {
      out.push_back(cur);
      return;
    }
    if (ups < n) {
      cur.steps.push_back(1);
      self(self, ups + 1, downs);
      cur.steps.pop_back();
    }
    if (downs < ups) {
      cur.steps.push_back(-1);
      self(self, ups, downs + 1);
      cur.steps.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

Permutation dyck_to_321(const DyckPath& path) {
  if (!path.valid()) throw std::invalid_argument("dyck_to_321: invalid path");
  const std::size_t n = path.semilength();
  std::vector<Permutation::value_type> out(n, 0);
  std::vector<bool> used(n + 1, false);
  std::size_t ups = 0, downs = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i] > 0) {
      ++ups;
      if (i + 1 < path.steps.size() && path.steps[i + 1] < 0) {
        out[downs] = static_cast<Permutation::value_type>(ups);
        used[ups] = true;
      }
    } else {
      ++downs;
    }
  }
  Permutation::value_type v = 1;
  for (auto& x : out) {
    if (x) continue;
    while (used[v]) ++v;
    x = v++;
  }
  return make_unchecked(std::move(out));
}

Permutation dyck_to_132(const DyckPath& path) {
  if (!path.valid()) throw std::invalid_argument("dyck_to_132: invalid path");
  const std::size_t len = path.steps.size();
  const std::size_t n = len / 2;
  std::vector<std::size_t> match(len, 0);
  {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < len; ++i) {
      if (path.steps[i] > 0) {
        open.push_back(i);
      } else {
        match[open.back()] = i;
        open.pop_back();
      }
    }
  }
  struct Task {
    std::size_t begin, end;  // step range
    std::size_t offset;      // values offset+1 .. offset+m
    std::size_t position;    // first output slot
  };
  std::vector<Permutation::value_type> out(n);
  std::vector<Task> stack{{0, len, 0, 0}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.begin == t.end) continue;
    const std::size_t m = (t.end - t.begin) / 2;
    const std::size_t close = match[t.begin];
    const std::size_t i = (close - t.begin - 1) / 2;
    out[t.position + i] = static_cast<Permutation::value_type>(t.offset + m);
    stack.push_back({t.begin + 1, close, t.offset + (m - 1 - i), t.position});
    stack.push_back({close + 1, t.end, t.offset, t.position + i + 1});
  }
  return make_unchecked(std::move(out));
}

}  // namespace fpbl
