#pragma once

#include "schubert_fk/integer.hpp"
#include "schubert_fk/permutation.hpp"
#include "schubert_fk/partition.hpp"
#include "schubert_fk/sparse_sum.hpp"
#include "schubert_fk/polynomial.hpp"
#include "schubert_fk/symmetric.hpp"
#include "schubert_fk/schubert.hpp"
#include "schubert_fk/fk_algebra.hpp"
#include "schubert_fk/bruhat.hpp"
#include "schubert_fk/pieri.hpp"
#include "schubert_fk/quantum.hpp"
#include "schubert_fk/diagram.hpp"
#include "schubert_fk/expansions.hpp"
#include "schubert_fk/parallel.hpp"
#include "schubert_fk/verify.hpp"
