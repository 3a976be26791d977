#ifndef BSHARP_BSHARP_HPP
#define BSHARP_BSHARP_HPP

#include "bsharp/algebra.hpp"
#include "bsharp/holder.hpp"
#include "bsharp/hull.hpp"
#include "bsharp/sampling.hpp"
#include "bsharp/separation.hpp"
#include "bsharp/vec.hpp"

#endif
