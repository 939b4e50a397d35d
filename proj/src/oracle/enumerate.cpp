#include <stdexcept>

#include "kedl/oracle.hpp"

namespace kedl {

namespace {

// One odometer position. Applying a value writes it into the interpretation.
struct Digit {
  enum class Kind { AtomBit, PairBit, Row, Individual };
  Kind kind = Kind::AtomBit;
  std::size_t radix = 2;
  ElementSet* set = nullptr;        // AtomBit
  RoleExtension* role = nullptr;    // PairBit, Row
  std::size_t x = 0;                // element / source
  std::size_t y = 0;                // target for PairBit
  bool exact = false;               // Row: no "no successor" value
  std::string name;                 // Individual
  Sort sort = Sort::Object;         // Individual
};

}  // namespace

struct InterpretationEnumerator::Impl {
  Signature sig;
  Bounds bounds;
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::size_t size_pos = 0;
  bool started = false;
  Interpretation current;
  std::vector<Digit> digits;
  std::vector<std::size_t> value;

  void apply(std::size_t k) {
    Digit& d = digits[k];
    const std::size_t v = value[k];
    switch (d.kind) {
      case Digit::Kind::AtomBit:
        d.set->set(d.x, v != 0);
        break;
      case Digit::Kind::PairBit:
        d.role->rows[d.x].set(d.y, v != 0);
        break;
      case Digit::Kind::Row:
        d.role->rows[d.x].reset();
        if (d.exact)
          d.role->rows[d.x].set(v);
        else if (v > 0)
          d.role->rows[d.x].set(v - 1);
        break;
      case Digit::Kind::Individual:
        current.set_individual(d.name, {d.sort, v});
        break;
    }
  }

  void start_size() {
    const auto [dn, sn] = sizes[size_pos];
    current = Interpretation(sig, dn, sn, bounds.mode);
    digits.clear();
    for (const auto& e : sig.entries()) {
      if (e.category == Signature::Category::Atom) {
        for (std::size_t x = 0; x < current.domain_size(e.sort); ++x) {
          Digit d;
          d.kind = Digit::Kind::AtomBit;
          d.set = &current.atom(e.name);
          d.x = x;
          digits.push_back(d);
        }
      } else if (e.category == Signature::Category::Role) {
        RoleExtension* ext = &current.role(e.name);
        const std::size_t from = current.domain_size(source_sort(e.kind));
        const std::size_t to = current.domain_size(target_sort(e.kind));
        const bool functional = e.kind == RoleKind::Cross && bounds.mode != Functionality::Unrestricted;
        for (std::size_t x = 0; x < from; ++x) {
          if (functional) {
            Digit d;
          d.kind = Digit::Kind::Row;
            d.role = ext;
            d.x = x;
            d.exact = bounds.mode == Functionality::ExactlyOne;
            d.radix = d.exact ? to : to + 1;
            digits.push_back(d);
          } else {
            for (std::size_t y = 0; y < to; ++y) {
              Digit d;
          d.kind = Digit::Kind::PairBit;
              d.role = ext;
              d.x = x;
              d.y = y;
              digits.push_back(d);
            }
          }
        }
      } else {
        Digit d;
          d.kind = Digit::Kind::Individual;
        d.radix = current.domain_size(e.sort);
        d.name = e.name;
        d.sort = e.sort;
        digits.push_back(std::move(d));
      }
    }
    value.assign(digits.size(), 0);
    for (std::size_t k = 0; k < digits.size(); ++k) apply(k);
  }

  bool next() {
    if (!started) {
      started = true;
      if (sizes.empty()) return false;
      start_size();
      return true;
    }
    if (size_pos >= sizes.size()) return false;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (++value[k] < digits[k].radix) {
        apply(k);
        return true;
      }
      value[k] = 0;
      apply(k);
    }
    // Odometer wrapped: move to the next domain sizes.
    if (++size_pos >= sizes.size()) return false;
    start_size();
    return true;
  }
};

InterpretationEnumerator::InterpretationEnumerator(Signature sig, Bounds b) : impl_(std::make_unique<Impl>()) {
  if (b.max_delta == 0 || b.max_sigma == 0 || b.max_delta > kMaxDomainSize || b.max_sigma > kMaxDomainSize)
    throw std::invalid_argument("bounds must lie between 1 and " + std::to_string(kMaxDomainSize));
  impl_->sig = std::move(sig);
  impl_->bounds = b;
  impl_->sizes = size_order(b);
}

InterpretationEnumerator::~InterpretationEnumerator() = default;
InterpretationEnumerator::InterpretationEnumerator(InterpretationEnumerator&&) noexcept = default;
InterpretationEnumerator& InterpretationEnumerator::operator=(InterpretationEnumerator&&) noexcept = default;

bool InterpretationEnumerator::next() { return impl_->next(); }

const Interpretation& InterpretationEnumerator::current() const { return impl_->current; }

void enumerate_interpretations(const Signature& sig, const Bounds& b,
                               const std::function<bool(const Interpretation&)>& visit) {
  InterpretationEnumerator it(sig, b);
  while (it.next())
    if (!visit(it.current())) return;
}

std::uint64_t count_models(const Concept& e, const Signature& sig, const Bounds& b) {
  std::uint64_t n = 0;
  enumerate_interpretations(sig, b, [&](const Interpretation& i) {
    if (extension(e, i).any()) ++n;
    return true;
  });
  return n;
}

}  // namespace kedl
