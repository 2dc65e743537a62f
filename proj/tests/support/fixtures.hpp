#pragma once

#include <initializer_list>
#include <string>

#include "dgldpc/ensemble.hpp"

namespace fixtures {

inline const char* const kHamming74 = "1000110\n0100101\n0010011\n0001111";
inline const char* const kCode32 = "101\n011";

inline dgldpc::BinaryMatrix matrix(const char* text) { return dgldpc::BinaryMatrix::parse(text); }

inline dgldpc::NodeType rep(std::size_t j, double fraction) {
    return {dgldpc::Repetition{j}, fraction};
}
inline dgldpc::NodeType spc(std::size_t j, double fraction) {
    return {dgldpc::SingleParityCheck{j}, fraction};
}
inline dgldpc::NodeType generic(const dgldpc::BinaryMatrix& g, double fraction) {
    return {dgldpc::GenericCode{g}, fraction};
}
inline dgldpc::NodeType generic(const char* text, double fraction) {
    return generic(matrix(text), fraction);
}
inline dgldpc::NodeType generic_rep(std::size_t j, double fraction) {
    return generic(dgldpc::ComponentCode::repetition(j).generator(), fraction);
}
inline dgldpc::NodeType generic_spc(std::size_t j, double fraction) {
    return generic(dgldpc::ComponentCode::single_parity_check(j).generator(), fraction);
}

inline dgldpc::ValidatedEnsemble ensemble(std::initializer_list<dgldpc::NodeType> vars,
                                          std::initializer_list<dgldpc::NodeType> checks) {
    return dgldpc::validate(dgldpc::Ensemble{vars, checks});
}

}  // namespace fixtures
