#include "braidcalc/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "braidcalc/braided.hpp"
#include "braidcalc/families.hpp"
#include "braidcalc/witt.hpp"

namespace braidcalc {

namespace {

class ArgReader {
 public:
  ArgReader(const std::string& builtin, const BuiltinArgs& args, std::vector<std::string> allowed,
            std::string symbol)
      : builtin_(builtin), args_(args) {
    env_.symbol = std::move(symbol);
    for (const auto& [k, v] : args_)
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        throw Error("builtin '" + builtin_ + "' has no parameter '" + k + "'");
  }

  bool has(const std::string& key) const { return args_.count(key) > 0; }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = args_.find(key);
    return it == args_.end() ? fallback : it->second;
  }

  Scalar scalar(const std::string& key, const std::string& fallback) {
    Scalar v = parse_scalar_expr(text(key, fallback), env_);
    env_.parameters[key] = v;
    return v;
  }

  int integer(const std::string& key, int fallback, int lo, int hi) {
    Scalar v = parse_scalar_expr(text(key, std::to_string(fallback)), env_);
    if (!v.is_constant() || v.constant().get_den() != 1 || v.constant() < lo || v.constant() > hi)
      throw Error("builtin '" + builtin_ + "': " + key + " must be an integer in [" + std::to_string(lo) + ", " +
                  std::to_string(hi) + "]");
    return static_cast<int>(v.constant().get_num().get_si());
  }

 private:
  std::string builtin_;
  const BuiltinArgs& args_;
  ExprEnv env_;
};

Braiding mre_braiding(ArgReader& r) {
  int m = r.integer("m", 2, 1, 4);
  std::string kind = r.text("braiding", "hecke");
  if (kind == "hecke") return standard_hecke(m);
  if (kind == "flip") return flip(m);
  throw Error("builtin 'mre': braiding must be hecke or flip");
}

}  // namespace

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw Error("bad range '" + text + "'");
    return v;
  };
  if (dots == std::string::npos) throw Error("bad range '" + text + "' (expected a..b)");
  std::string_view sv(text);
  long a = number(sv.substr(0, dots)), b = number(sv.substr(dots + 2));
  if (b < a) throw Error("bad range '" + text + "'");
  return {a, b};
}

const std::vector<BuiltinInfo>& builtin_catalog() {
  static const std::vector<BuiltinInfo> catalog = {
      {"end-involutive", {"m", "p", "n"}, false, "End(V) algebra of an involutive flip"},
      {"gl", {"m", "hbar"}, true, "enveloping algebra of gl(m) with parameter h"},
      {"jackson-sl2", {"q"}, false, "Jackson sl(2) algebra"},
      {"mre", {"m", "hbar", "braiding"}, true, "modified reflection equation algebra"},
      {"qwitt-truncated", {"range", "q"}, false, "q-Witt relations on e_a..e_b"},
      {"sl2-like", {"a", "b", "c", "k", "l", "m"}, false, "xy - a yx = kx, yz - b zy = lz, zx - c xz = my"},
      {"su2-like", {"a", "b", "c", "k", "l", "m"}, false, "xy - a yx = kz, yz - b zy = lx, zx - c xz = my"},
      {"u2", {"hbar"}, true, "U(u(2)_h) on t, x, y, z"},
  };
  return catalog;
}

AlgebraPresentation builtin(const std::string& name, const BuiltinArgs& args) {
  if (name == "gl") {
    ArgReader r(name, args, {"m", "hbar"}, "h");
    int m = r.integer("m", 2, 1, 4);
    return gl_presentation(m, r.scalar("hbar", "h"));
  }
  if (name == "u2") {
    ArgReader r(name, args, {"hbar"}, "h");
    return u2_weyl(r.scalar("hbar", "h")).A;
  }
  if (name == "mre") {
    ArgReader r(name, args, {"m", "hbar", "braiding"}, "q");
    Braiding b = mre_braiding(r);
    return mre_presentation(b, r.scalar("hbar", "1"));
  }
  if (name == "qwitt-truncated") {
    ArgReader r(name, args, {"range", "q"}, "q");
    auto [lo, hi] = parse_range(r.text("range", "1..6"));
    if (hi - lo > 15) throw Error("builtin 'qwitt-truncated': at most 16 generators");
    return witt_presentation(lo, hi, qwitt(r.scalar("q", "q")));
  }
  if (name == "jackson-sl2") {
    ArgReader r(name, args, {"q"}, "q");
    return jackson_sl2(r.scalar("q", "q"));
  }
  if (name == "sl2-like" || name == "su2-like") {
    ArgReader r(name, args, {"a", "b", "c", "k", "l", "m"}, "q");
    Scalar a = r.scalar("a", "1");
    Scalar b = r.scalar("b", "a");
    Scalar c = r.scalar("c", name == "sl2-like" ? "1" : "a");
    Scalar k = r.scalar("k", "1");
    Scalar l = r.scalar("l", name == "sl2-like" ? "k" : "1");
    Scalar m = r.scalar("m", "1");
    return name == "sl2-like" ? sl2_like(a, b, c, k, l, m) : su2_like(a, b, c, k, l, m);
  }
  if (name == "end-involutive") {
    ArgReader r(name, args, {"m", "p", "n"}, "q");
    Braiding b = r.has("p") || r.has("n") ? super_flip(r.integer("p", 1, 0, 3), r.integer("n", 1, 0, 3))
                                          : flip(r.integer("m", 2, 1, 4));
    AlgebraPresentation p = mre_presentation(b, 1);
    p.name = "end-involutive";
    return p;
  }
  throw Error("unknown builtin '" + name + "'");
}

WeylPresentation builtin_weyl(const std::string& name, const BuiltinArgs& args) {
  if (name == "gl") {
    ArgReader r(name, args, {"m", "hbar"}, "h");
    int m = r.integer("m", 2, 1, 4);
    return gl_weyl(m, r.scalar("hbar", "h"));
  }
  if (name == "u2") {
    ArgReader r(name, args, {"hbar"}, "h");
    return u2_weyl(r.scalar("hbar", "h"));
  }
  if (name == "mre") {
    ArgReader r(name, args, {"m", "hbar", "braiding"}, "q");
    Braiding b = mre_braiding(r);
    return braided_weyl(b, r.scalar("hbar", "1"));
  }
  throw Error("builtin '" + name + "' has no derivative algebra");
}

}  // namespace braidcalc
