#include "fincat/skeleton.hpp"

#include <fmt/format.h>

#include "fincat/error.hpp"

namespace fincat {

ObjId FinSetSkeleton::object(std::size_t size) const {
  if (size > max_size())
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("size {} outside skeleton 0..{}", size, max_size()));
  return ObjId{size};
}

MorId FinSetSkeleton::morphism(const FinFunction& f) const {
  const std::size_t n1 = max_size() + 1;
  if (f.dom() >= n1 || f.cod() >= n1)
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("{}->{} function outside skeleton", f.dom(), f.cod()));
  return MorId{first_of[f.dom() * n1 + f.cod()] + encode_table(f.table(), f.cod())};
}

FinSetSkeleton finset_skeleton(std::size_t n) {
  FinSetSkeleton s;
  const std::size_t n1 = n + 1;
  CategoryBuilder b;
  for (std::size_t k = 0; k <= n; ++k) b.add_object(std::to_string(k));
  s.first_of.assign(n1 * n1, 0);
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t c = 0; c <= n; ++c) {
      s.first_of[a * n1 + c] = s.functions.size();
      for_each_function(a, c, [&](const FinFunction& f) {
        std::string label = "[";
        for (std::size_t i = 0; i < f.dom(); ++i) label += (i ? "," : "") + std::to_string(f(i));
        label += fmt::format("]:{}->{}", a, c);
        b.add_morphism(std::move(label), ObjId{a}, ObjId{c});
        s.functions.push_back(f);
      });
    }
  for (std::size_t k = 0; k <= n; ++k) {
    b.set_identity(ObjId{k}, MorId{s.first_of[k * n1 + k] +
                                   encode_table(identity_function(k).table(), k)});
  }
  const std::size_t m = s.functions.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      const auto& ff = s.functions[f];
      const auto& gg = s.functions[g];
      if (ff.cod() != gg.dom()) continue;
      auto h = compose(gg, ff);
      b.set_compose(MorId{g}, MorId{f},
                    MorId{s.first_of[h.dom() * n1 + h.cod()] + encode_table(h.table(), h.cod())});
    }
  s.category = share(b.build(false));
  return s;
}

}  // namespace fincat
