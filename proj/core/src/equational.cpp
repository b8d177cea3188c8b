#include "monoidlab/equational.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>
#include <unordered_map>

namespace monoidlab {

  ////////////////////////////////////////////////////////////////////////
  // Identity
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::string_view approx_utf8 = "\xE2\x89\x88";

    std::string_view trim(std::string_view s) {
      auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
      };
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Joint renaming of p then q by first occurrence.
    std::pair<Word, Word> rename_jointly(Word const& p, Word const& q) {
      std::map<Letter, Letter> renaming;
      auto rename = [&renaming](Word const& w) {
        Word out;
        for (Letter x : w) {
          auto it = renaming.find(x);
          if (it == renaming.end()) {
            it = renaming.emplace(x, canonical_letter(renaming.size())).first;
          }
          out.push_back(it->second);
        }
        return out;
      };
      Word a = rename(p);
      Word b = rename(q);
      return {std::move(a), std::move(b)};
    }
  }  // namespace

  Identity Identity::parse(std::string_view text) {
    std::size_t sep     = text.find(approx_utf8);
    std::size_t sep_len = approx_utf8.size();
    if (sep == std::string_view::npos) {
      sep     = text.find('=');
      sep_len = 1;
    }
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("identity needs a separator '=': \""
                                  + std::string(text) + "\"");
    }
    auto left  = trim(text.substr(0, sep));
    auto right = trim(text.substr(sep + sep_len));
    if (right.find('=') != std::string_view::npos
        || right.find(approx_utf8) != std::string_view::npos) {
      throw std::invalid_argument("identity has more than one separator: \""
                                  + std::string(text) + "\"");
    }
    return Identity(Word::parse(left), Word::parse(right));
  }

  LetterSet Identity::alphabet() const {
    LetterSet result = monoidlab::alphabet(lhs);
    for (Letter x : rhs) {
      result.insert(x);
    }
    return result;
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
  }

  Identity Identity::canonical() const {
    auto forward  = rename_jointly(lhs, rhs);
    auto backward = rename_jointly(rhs, lhs);
    auto& best    = (backward < forward) ? backward : forward;
    Identity result(std::move(best.first), std::move(best.second));
    result.is_canonical = true;
    return result;
  }

  std::vector<Identity> parse_identities(std::istream& in) {
    std::vector<Identity> result;
    std::string           line;
    std::size_t           line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view view(line);
      if (auto hash = view.find('#'); hash != std::string_view::npos) {
        view = view.substr(0, hash);
      }
      view = trim(view);
      if (view.empty()) {
        continue;
      }
      try {
        result.push_back(Identity::parse(view));
      } catch (std::invalid_argument const& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": "
                                    + e.what());
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  Word Substitution::image(Letter x) const {
    auto it = images_.find(x);
    return it == images_.end() ? Word{x} : it->second;
  }

  Word Substitution::apply(Word const& w) const {
    Word result;
    for (Letter x : w) {
      auto it = images_.find(x);
      if (it == images_.end()) {
        result.push_back(x);
      } else {
        result *= it->second;
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // PatternMatcher
  ////////////////////////////////////////////////////////////////////////

  PatternMatcher::PatternMatcher(Word const& pattern) {
    std::map<Letter, std::size_t> id_of;
    for (Letter x : pattern) {
      auto [it, fresh] = id_of.emplace(x, variables_.size());
      if (fresh) {
        variables_.push_back(x);
      }
      ids_.push_back(it->second);
    }
    later_occurrences_.assign(ids_.size(), 0);
    std::vector<std::size_t> seen(variables_.size(), 0);
    for (std::size_t i = ids_.size(); i-- > 0;) {
      later_occurrences_[i] = seen[ids_[i]]++;
    }
  }

  Substitution PatternMatcher::to_substitution(
      std::span<Letter const>    target,
      std::span<ImageSpan const> images) const {
    std::map<Letter, Word> map;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
      map.emplace(variables_[v],
                  Word(target.subspan(images[v].start, images[v].length)));
    }
    return Substitution(std::move(map));
  }

  std::vector<Substitution> match_pattern(Word const& pattern,
                                          Word const& target) {
    PatternMatcher            matcher(pattern);
    std::vector<Substitution> result;
    auto                      t = target.letters();
    matcher.for_each_match(t, [&](std::span<ImageSpan const> images) {
      result.push_back(matcher.to_substitution(t, images));
      return true;
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // direct_successors
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Every word over `alpha` of length <= len, in shortlex order, grown on
    // demand.
    class WordPool {
     public:
      explicit WordPool(LetterSet const& alpha) : _alpha(alpha.begin(), alpha.end()) {
        _words.emplace_back();
        _ends.push_back(1);
      }

      std::span<Word const> up_to(std::size_t len) {
        while (_ends.size() <= len && !_alpha.empty()) {
          std::size_t const from = _ends.size() == 1 ? 0 : _ends[_ends.size() - 2];
          std::size_t const to   = _ends.back();
          for (std::size_t i = from; i < to; ++i) {
            for (Letter x : _alpha) {
              Word v = _words[i];
              v.push_back(x);
              _words.push_back(std::move(v));
            }
          }
          _ends.push_back(_words.size());
        }
        std::size_t const n = _ends[std::min(len, _ends.size() - 1)];
        return {_words.data(), n};
      }

     private:
      std::vector<Letter>      _alpha;
      std::vector<Word>        _words;
      std::vector<std::size_t> _ends;
    };
  }  // namespace

  std::vector<Successor> direct_successors(Word const&               w,
                                           std::span<Identity const> sigma,
                                           std::size_t               max_length,
                                           LetterSet const&          image_letters) {
    std::unordered_map<Word, RewriteStep, WordHash> found;
    auto const                                      letters = w.letters();
    LetterSet                                       alpha   = alphabet(w);
    alpha.insert(image_letters.begin(), image_letters.end());
    WordPool pool(alpha);

    for (std::size_t k = 0; k < sigma.size(); ++k) {
      for (bool forward : {true, false}) {
        Word const&    from = forward ? sigma[k].lhs : sigma[k].rhs;
        Word const&    to   = forward ? sigma[k].rhs : sigma[k].lhs;
        PatternMatcher matcher(from);
        LetterSet      unbound = alphabet(to);
        for (Letter x : matcher.variables()) {
          unbound.erase(x);
        }
        for (std::size_t start = 0; start <= w.size(); ++start) {
          for (std::size_t len = 0; start + len <= w.size(); ++len) {
            auto window = letters.subspan(start, len);
            matcher.for_each_match(window, [&](std::span<ImageSpan const> images) {
              auto const vars = matcher.variables();
              // Length of phi(to) without materializing it first.
              std::size_t to_len = 0;
              for (Letter x : to) {
                auto it = std::find(vars.begin(), vars.end(), x);
                if (it != vars.end()) {
                  to_len += images[static_cast<std::size_t>(it - vars.begin())].length;
                }
              }
              std::size_t new_len = w.size() - len + to_len;
              if (new_len > max_length) {
                return true;
              }
              Substitution phi = matcher.to_substitution(window, images);
              std::size_t const slack =
                  max_length == unbounded ? 0 : max_length - new_len;
              auto emit = [&](Substitution const& full) {
                Word result = Word(letters.subspan(0, start));
                result *= full.apply(to);
                result *= Word(letters.subspan(start + len));
                if (result == w || found.contains(result)) {
                  return;
                }
                RewriteStep step;
                step.identity_index = k;
                step.forward        = forward;
                step.prefix         = Word(letters.subspan(0, start));
                step.suffix         = Word(letters.subspan(start + len));
                step.substitution   = full;
                found.emplace(std::move(result), std::move(step));
              };
              auto assign = [&](auto&& self, auto it, std::size_t left) -> void {
                if (it == unbound.end()) {
                  emit(phi);
                  return;
                }
                Letter const      x   = *it;
                std::size_t const occ = occurrences(to, x);
                for (Word const& image : pool.up_to(left / occ)) {
                  phi.set(x, image);
                  self(self, std::next(it), left - occ * image.size());
                }
              };
              assign(assign, unbound.begin(), slack);
              return true;
            });
          }
        }
      }
    }

    std::vector<Successor> result;
    result.reserve(found.size());
    for (auto& [word, step] : found) {
      result.push_back(Successor{word, std::move(step)});
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.word < b.word;
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // deduce
  ////////////////////////////////////////////////////////////////////////

  void SearchBudget::validate() const {
    if (max_word_length == 0 || max_visited_states == 0 || max_depth == 0) {
      throw std::invalid_argument("search budget fields must be positive");
    }
  }

  namespace {
    struct Visit {
      std::optional<Word> parent;
      RewriteStep         step;  // parent -> this word
      std::size_t         depth = 0;
    };

    using VisitMap = std::unordered_map<Word, Visit, WordHash>;

    // Path from the root of `visits` to `w`, as chain plus steps.
    Derivation path_from_root(VisitMap const& visits, Word const& w) {
      Derivation d;
      Word       cur = w;
      d.chain.push_back(cur);
      while (true) {
        Visit const& v = visits.at(cur);
        if (!v.parent) {
          break;
        }
        d.steps.push_back(v.step);
        cur = *v.parent;
        d.chain.push_back(cur);
      }
      std::reverse(d.chain.begin(), d.chain.end());
      std::reverse(d.steps.begin(), d.steps.end());
      return d;
    }

    Derivation join_paths(VisitMap const& from_u,
                          VisitMap const& from_v,
                          Word const&     meet) {
      Derivation d    = path_from_root(from_u, meet);
      Derivation back = path_from_root(from_v, meet);
      // back runs v -> meet; append it reversed.
      for (std::size_t i = back.steps.size(); i-- > 0;) {
        d.steps.push_back(back.steps[i].reversed());
        d.chain.push_back(back.chain[i]);
      }
      return d;
    }
  }  // namespace

  DeductionResult deduce(Word const&               u,
                         Word const&               v,
                         std::span<Identity const> sigma,
                         SearchBudget const&       budget) {
    budget.validate();
    if (u == v) {
      return Derivation{{u}, {}};
    }
    NotFoundWithinBudget stats;
    LetterSet            image_letters = alphabet(u);
    for (Letter x : v) {
      image_letters.insert(x);
    }
    if (u.size() > budget.max_word_length || v.size() > budget.max_word_length) {
      return stats;
    }

    VisitMap          sides[2];
    std::vector<Word> frontier[2];
    std::size_t       depth[2] = {0, 0};
    sides[0].emplace(u, Visit{});
    sides[1].emplace(v, Visit{});
    frontier[0].push_back(u);
    frontier[1].push_back(v);
    stats.visited_states = 2;

    while (!frontier[0].empty() && !frontier[1].empty()) {
      if (depth[0] + depth[1] >= budget.max_depth) {
        break;
      }
      int side  = frontier[1].size() < frontier[0].size() ? 1 : 0;
      int other = 1 - side;
      std::vector<Word> next;
      for (Word const& w : frontier[side]) {
        ++stats.expanded_states;
        for (auto& s : direct_successors(w, sigma, budget.max_word_length, image_letters)) {
          if (sides[side].contains(s.word)) {
            continue;
          }
          sides[side].emplace(s.word, Visit{w, s.step, depth[side] + 1});
          ++stats.visited_states;
          if (sides[other].contains(s.word)) {
            return join_paths(sides[0], sides[1], s.word);
          }
          next.push_back(std::move(s.word));
          if (stats.visited_states >= budget.max_visited_states) {
            stats.depth_reached = depth[0] + depth[1] + 1;
            return stats;
          }
        }
      }
      std::sort(next.begin(), next.end());
      frontier[side] = std::move(next);
      ++depth[side];
    }
    stats.depth_reached      = depth[0] + depth[1];
    stats.frontier_exhausted = frontier[0].empty() || frontier[1].empty();
    return stats;
  }

  bool verify_derivation(Derivation const& d, std::span<Identity const> sigma) {
    if (d.chain.empty() || d.steps.size() + 1 != d.chain.size()) {
      throw std::invalid_argument("derivation needs exactly one step per link");
    }
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      RewriteStep const& step = d.steps[i];
      if (step.identity_index >= sigma.size()) {
        throw std::out_of_range("derivation step " + std::to_string(i)
                                + " cites identity "
                                + std::to_string(step.identity_index) + " of "
                                + std::to_string(sigma.size()));
      }
      Identity const& id   = sigma[step.identity_index];
      Word const&     from = step.forward ? id.lhs : id.rhs;
      Word const&     to   = step.forward ? id.rhs : id.lhs;
      Word source = step.prefix * step.substitution.apply(from) * step.suffix;
      Word target = step.prefix * step.substitution.apply(to) * step.suffix;
      if (source != d.chain[i] || target != d.chain[i + 1]) {
        return false;
      }
    }
    return true;
  }

}  // namespace monoidlab
