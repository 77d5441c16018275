#ifndef BESPACED_SRC_OVERLOADED_HPP
#define BESPACED_SRC_OVERLOADED_HPP

namespace bespaced::detail {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace bespaced::detail

#endif  // BESPACED_SRC_OVERLOADED_HPP
