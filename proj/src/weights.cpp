#include "tropsi/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace tropsi {

std::vector<int> marks_of(MarkSet s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1) {
    if (s & 1) out.push_back(i);
  }
  return out;
}

std::string mark_set_to_string(MarkSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int mark : marks_of(s)) {
    if (!first) os << ',';
    os << mark;
    first = false;
  }
  os << '}';
  return os.str();
}

WeightVector::WeightVector(int n, int lights) : n_(n), m_(lights) {
  if (n_ < 4) throw std::invalid_argument("weight vector needs n >= 4 marks");
  if (m_ < 0 || n_ - m_ < 2) {
    throw std::invalid_argument("heavy/light weight vector needs at least 2 heavy marks");
  }
  if (n_ > 31) throw std::invalid_argument("mark sets are limited to n <= 31");
}

WeightVector WeightVector::from_weights(const std::vector<Rat>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 4) throw std::invalid_argument("weight vector needs n >= 4 marks");
  for (const Rat& w : weights) {
    if (w <= 0 || w > 1) throw std::invalid_argument("weights must lie in (0, 1]");
  }
  // Mark i is heavy iff it pairs above 1 with every other mark.
  std::vector<bool> heavy(n, true);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && weights[i] + weights[j] <= 1) heavy[i] = false;
    }
  }
  Rat light_total = 0;
  int heavies = 0;
  for (int i = 0; i < n; ++i) {
    if (heavy[i]) {
      ++heavies;
    } else {
      light_total += weights[i];
      // A non-heavy mark must be small: it may only pair above 1 with heavies.
      for (int j = 0; j < n; ++j) {
        if (j != i && !heavy[j] && weights[i] + weights[j] > 1) {
          throw std::invalid_argument(
              "weights are not heavy/light (marks " + std::to_string(i + 1) + " and " +
              std::to_string(j + 1) +
              " are neither heavy nor jointly light); the tropical moduli fan is "
              "balanced only for heavy/light weights");
        }
      }
    }
  }
  if (light_total >= 1) {
    throw std::invalid_argument(
        "weights are not heavy/light (total light weight is not below 1); the tropical "
        "moduli fan is balanced only for heavy/light weights");
  }
  for (int i = 0; i < n; ++i) {
    if (heavy[i] != (i < heavies)) {
      throw std::invalid_argument("heavy weights must precede light weights");
    }
  }
  return WeightVector(n, n - heavies);
}

bool WeightVector::weight_at_most_one(MarkSet marks) const {
  const int heavies = mark_count(marks & heavy_set());
  if (heavies == 0) return true;  // all light: total light weight < 1
  return heavies == 1 && mark_count(marks) == 1;
}

bool WeightVector::vertex_stable(int valence, MarkSet marks) const {
  const int heavies = mark_count(marks & heavy_set());
  const int lights = mark_count(marks & light_set());
  if (valence + heavies >= 3) return true;
  return valence + heavies == 2 && lights >= 1;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << "(1^" << heavy_count() << ", eps^" << m_ << ")";
  return os.str();
}

}  // namespace tropsi
