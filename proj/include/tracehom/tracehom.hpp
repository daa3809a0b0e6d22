#ifndef TRACEHOM_TRACEHOM_HPP
#define TRACEHOM_TRACEHOM_HPP

#include "tracehom/action.hpp"
#include "tracehom/analysis.hpp"
#include "tracehom/cenet.hpp"
#include "tracehom/complex.hpp"
#include "tracehom/errors.hpp"
#include "tracehom/io.hpp"
#include "tracehom/oracle.hpp"
#include "tracehom/smith.hpp"
#include "tracehom/trace.hpp"

#endif  // TRACEHOM_TRACEHOM_HPP
