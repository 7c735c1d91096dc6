#pragma once

#include "nfam/census.hpp"
#include "nfam/construct.hpp"
#include "nfam/family.hpp"
#include "nfam/io.hpp"
#include "nfam/polytope.hpp"
#include "nfam/search.hpp"
#include "nfam/seq.hpp"
#include "nfam/verify.hpp"
