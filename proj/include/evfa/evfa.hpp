#ifndef EVFA_EVFA_HPP
#define EVFA_EVFA_HPP

#include "classroom.hpp"
#include "compile.hpp"
#include "dfa.hpp"
#include "errors.hpp"
#include "match.hpp"
#include "nfa.hpp"
#include "regex.hpp"
#include "symbol.hpp"
#include "trace_io.hpp"

#endif  // EVFA_EVFA_HPP
