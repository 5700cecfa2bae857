#include <variant>

#include "flowcat/moves.hpp"

namespace flowcat {

FlowCategory apply_move(const FlowCategory& cat, const Move& move) {
  return std::visit(
      [&cat](const auto& m) -> FlowCategory {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SlideMove>)
          return handle_slide(cat, m.x, m.y, m.sigma);
        else if constexpr (std::is_same_v<T, WhitneyMove>)
          return whitney_cancel_points(cat, m.x, m.y, m.pos, m.neg);
        else if constexpr (std::is_same_v<T, NormalizeMove>)
          return normalize_circles(cat, m.a, m.b);
        else if constexpr (std::is_same_v<T, IntermediateMove>)
          return intermediate_category(cat, m.x, m.y, m.sigma);
        else if constexpr (std::is_same_v<T, CancelMove>)
          return handle_cancel(cat, m.u, m.l);
        else
          return birth(cat, m.u, m.l, m.grading);
      },
      move);
}

FlowCategory apply_logged(const FlowCategory& cat, const Move& move,
                          MoveLog& log) {
  LogEntry entry;
  entry.move = move;
  entry.digest_before = digest(cat);
  FlowCategory next = apply_move(cat, move);
  entry.digest_after = digest(next);
  log.entries.push_back(std::move(entry));
  return next;
}

FlowCategory replay(FlowCategory cat, const MoveLog& log) {
  FlowCategory current = std::move(cat);
  for (std::size_t i = 0; i < log.entries.size(); ++i) {
    const LogEntry& entry = log.entries[i];
    if (digest(current) != entry.digest_before)
      throw std::runtime_error("replay digest mismatch before step " +
                               std::to_string(i + 1));
    current = apply_move(current, entry.move);
    if (digest(current) != entry.digest_after)
      throw std::runtime_error("replay digest mismatch after step " +
                               std::to_string(i + 1));
  }
  return current;
}

}  // namespace flowcat
