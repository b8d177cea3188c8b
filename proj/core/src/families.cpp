#include "monoidlab/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monoidlab::families {

  namespace {
    Letter letter(std::string_view base) {
      return Letter(base);
    }
    Letter letter(std::string_view base, std::size_t i) {
      return Letter(base, static_cast<std::uint32_t>(i));
    }
    Word word(std::string_view text) {
      return Word::parse(text);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::size_t> images)
      : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (auto i : images_) {
      if (i == 0 || i > images_.size() || seen[i]) {
        throw std::invalid_argument("not a permutation of 1.."
                                    + std::to_string(images_.size()) + ": "
                                    + to_string());
      }
      seen[i] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{1});
    return Permutation(std::move(images));
  }

  Permutation Permutation::parse(std::string_view text) {
    std::vector<std::size_t> images;
    std::istringstream       in{std::string(text)};
    std::string              token;
    while (in >> token) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed permutation image \"" + token + "\"");
      }
      images.push_back(value);
    }
    return Permutation(std::move(images));
  }

  std::vector<Permutation> Permutation::all(std::size_t n) {
    std::vector<Permutation> result;
    auto                     images = identity(n).images();
    do {
      result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
  }

  std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i != 0) {
        s.push_back(' ');
      }
      s += std::to_string(images_[i]);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word chain_word(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("chain_word needs n >= 1");
    }
    Letter const x = letter("x");
    Word         w{x};
    for (std::size_t i = 1; i <= n; ++i) {
      w.push_back(letter("t", i));
      w.push_back(x);
    }
    return w;
  }

  namespace {
    void check_a_params(std::size_t n, std::size_t m, Permutation const& rho) {
      if (n == 0 || m == 0) {
        throw std::invalid_argument("a-words need n, m >= 1");
      }
      if (rho.degree() != n + m) {
        throw std::invalid_argument("permutation degree " + std::to_string(rho.degree())
                                    + " does not match n + m = "
                                    + std::to_string(n + m));
      }
    }

    // prod_{i = first}^{last} z_{iρ}; empty when first > last.
    Word permuted_z(Permutation const& rho, std::size_t first, std::size_t last) {
      Word w;
      for (std::size_t i = first; i <= last; ++i) {
        w.push_back(letter("z", rho(i)));
      }
      return w;
    }
  }  // namespace

  Word a_word(std::size_t n, std::size_t m, Permutation const& rho) {
    check_a_params(n, m, rho);
    Letter const x = letter("x");
    Word         w;
    for (std::size_t i = 1; i <= n; ++i) {
      w.push_back(letter("z", i));
      w.push_back(letter("t", i));
    }
    w.push_back(x);
    w *= permuted_z(rho, 1, n + m);
    w.push_back(x);
    for (std::size_t i = n + 1; i <= n + m; ++i) {
      w.push_back(letter("t", i));
      w.push_back(letter("z", i));
    }
    return w;
  }

  Word a_prime_word(std::size_t n, std::size_t m, Permutation const& rho) {
    check_a_params(n, m, rho);
    Letter const x = letter("x");
    Word         w;
    for (std::size_t i = 1; i <= n; ++i) {
      w.push_back(letter("z", i));
      w.push_back(letter("t", i));
    }
    w *= permuted_z(rho, 1, n + m);
    w.push_back(x);
    w.push_back(x);
    for (std::size_t i = n + 1; i <= n + m; ++i) {
      w.push_back(letter("t", i));
      w.push_back(letter("z", i));
    }
    return w;
  }

  std::vector<Identity> theorem_basis_fixed() {
    return {
        Identity::parse("x x = x x x"),
        Identity::parse("x x y = y x x"),
        Identity::parse("x y z x t y = y x z x t y"),
        Identity::parse("x z y t x y = x z y t y x"),
        Identity::parse("x z x t x y s y = x z x t y x s y"),
        Identity::parse("x z x y t y s y = x z y x t y s y"),
    };
  }

  std::vector<Identity> theorem_ii_basis(std::size_t n_max, std::size_t m_max) {
    if (n_max == 0 || m_max == 0) {
      throw std::invalid_argument("basis bounds must be >= 1");
    }
    auto basis = theorem_basis_fixed();
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t m = 1; m <= m_max; ++m) {
        for (auto const& rho : Permutation::all(n + m)) {
          basis.emplace_back(a_word(n, m, rho), a_prime_word(n, m, rho));
        }
      }
    }
    return basis;
  }

  ////////////////////////////////////////////////////////////////////////
  // Varieties
  ////////////////////////////////////////////////////////////////////////

  VarietySpec VarietySpec::parse(std::string_view text) {
    auto with_n = [&](std::string_view prefix, VarietyKind kind) {
      auto        digits = text.substr(prefix.size());
      std::size_t n      = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0) {
        throw std::invalid_argument("variety \"" + std::string(text)
                                    + "\" needs a positive chain length");
      }
      return VarietySpec{kind, n};
    };
    if (text == "empty") {
      return {VarietyKind::empty, 0};
    }
    if (text == "one") {
      return {VarietyKind::one, 0};
    }
    if (text == "x") {
      return {VarietyKind::x, 0};
    }
    if (text == "xy") {
      return {VarietyKind::xy, 0};
    }
    if (text.starts_with("chain-zigzag:")) {
      return with_n("chain-zigzag:", VarietyKind::chain_with_zigzag);
    }
    if (text.starts_with("chain:")) {
      return with_n("chain:", VarietyKind::chain);
    }
    throw std::invalid_argument("unknown variety \"" + std::string(text)
                                + "\" (expected empty, one, x, xy, chain:N, "
                                  "chain-zigzag:N)");
  }

  std::string VarietySpec::to_string() const {
    switch (kind) {
      case VarietyKind::empty:
        return "empty";
      case VarietyKind::one:
        return "one";
      case VarietyKind::x:
        return "x";
      case VarietyKind::xy:
        return "xy";
      case VarietyKind::chain:
        return "chain:" + std::to_string(n);
      case VarietyKind::chain_with_zigzag:
        return "chain-zigzag:" + std::to_string(n);
    }
    return "?";
  }

  std::vector<Word> variety_generators(VarietySpec const& spec) {
    switch (spec.kind) {
      case VarietyKind::empty:
        return {};
      case VarietyKind::one:
        return {Word()};
      case VarietyKind::x:
        return {word("x")};
      case VarietyKind::xy:
        return {word("x y")};
      case VarietyKind::chain:
        return {chain_word(spec.n)};
      case VarietyKind::chain_with_zigzag:
        return {word("x z x y t y"), chain_word(spec.n)};
    }
    return {};
  }

  std::vector<VarietySpec> finite_varieties(std::size_t n_max) {
    std::vector<VarietySpec> result = {{VarietyKind::empty, 0},
                                       {VarietyKind::one, 0},
                                       {VarietyKind::x, 0},
                                       {VarietyKind::xy, 0}};
    for (std::size_t n = 1; n <= n_max; ++n) {
      result.push_back({VarietyKind::chain, n});
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      result.push_back({VarietyKind::chain_with_zigzag, n});
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Step witnesses
  ////////////////////////////////////////////////////////////////////////

  std::pair<Word, Word> step1_words() {
    return {word("z1 t1 z2 t2 c c z1 b z2 x c y b s1 x s2 y"),
            word("z1 t1 z2 t2 c c z1 b z2 y c x b s1 x s2 y")};
  }

  std::pair<Word, Word> step3_words() {
    return {word("x s1 x s2 z1 t1 z2 t2 c z1 b z2 x c y b s3 y"),
            word("x s1 x s2 z1 t1 z2 t2 c z1 b z2 y c x b s3 y")};
  }

  Step2Construction step2_construction(std::size_t        n,
                                       std::size_t        m,
                                       Permutation const& rho,
                                       Step2Reading       reading) {
    check_a_params(n, m, rho);
    Step2Construction c;
    c.low_branch = rho(1) <= n;

    Letter const x  = letter("x");
    Letter const z  = letter("z");
    Letter const y1 = letter("y", 1);
    Letter const y2 = letter("y", 2);
    Letter const s1 = letter("s", 1);
    Letter const s2 = letter("s", 2);

    Word head;
    for (std::size_t i = 1; i <= n; ++i) {
      head.push_back(letter("z", i));
      head.push_back(letter("t", i));
    }
    Word tail;
    for (std::size_t i = n + 1; i <= n + m; ++i) {
      if (reading == Step2Reading::as_printed) {
        tail.push_back(letter("z", i));
        tail.push_back(letter("t", i));
      } else {
        tail.push_back(letter("t", i));
        tail.push_back(letter("z", i));
      }
    }
    if (c.low_branch) {
      c.p = head;
      c.r = tail * Word{s1, y1, s2, y2};
      c.x_generators = {word("y y x t x"), word("x y y t x")};
    } else {
      c.p = Word{y1, s1, y2, s2} * head;
      c.r = tail;
      c.x_generators = {word("x t x y y"), word("x t y y x")};
    }

    Letter const last_z = letter("z", rho(n + m));
    c.u = c.p * Word{x} * permuted_z(rho, 1, n + m - 1) * Word{y1, z, z, y2, last_z, x} * c.r;
    c.a = delete_letters(c.u, {z});
    Word const moved = c.p * Word{letter("z", rho(1)), x} * permuted_z(rho, 2, n + m - 1);
    c.a_prime = moved * Word{y1, y2, last_z, x} * c.r;
    c.u_prime = moved * Word{y1, z, z, y2, last_z, x} * c.r;
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block identities
  ////////////////////////////////////////////////////////////////////////

  Identity block_identity_one_letter(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("block identity needs n >= 1");
    }
    Letter const x = letter("x");
    Word         lhs{x};
    Word         rhs{x, x};
    for (std::size_t i = 1; i <= n; ++i) {
      lhs.push_back(letter("t", i));
      lhs.push_back(x);
      rhs.push_back(letter("t", i));
    }
    return Identity(std::move(lhs), std::move(rhs));
  }

  Identity block_identity_two_letters(std::size_t                k,
                                      std::size_t                l,
                                      std::vector<Letter> const& assignment) {
    Letter const x = letter("x");
    Letter const y = letter("y");
    if (assignment.size() != k + l) {
      throw std::invalid_argument("assignment needs k + l = " + std::to_string(k + l)
                                  + " letters");
    }
    bool has_x = false;
    bool has_y = false;
    for (Letter a : assignment) {
      if (a != x && a != y) {
        throw std::invalid_argument("assignment letters must be x or y");
      }
      has_x = has_x || a == x;
      has_y = has_y || a == y;
    }
    if (k + l > 0 && !(has_x && has_y)) {
      throw std::invalid_argument("assignment must use both x and y");
    }
    Word p, q;
    for (std::size_t i = 1; i <= k; ++i) {
      p.push_back(assignment[i - 1]);
      p.push_back(letter("t", i));
    }
    for (std::size_t i = k + 1; i <= k + l; ++i) {
      q.push_back(letter("t", i));
      q.push_back(assignment[i - 1]);
    }
    return Identity(p * Word{x, y} * q, p * Word{y, x} * q);
  }

}  // namespace monoidlab::families
