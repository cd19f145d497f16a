#pragma once

#include "cyclo/catalog.hpp"
#include "cyclo/classify.hpp"
#include "cyclo/digraph.hpp"
#include "cyclo/equivalence.hpp"
#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"
#include "cyclo/harness.hpp"
#include "cyclo/hermitian.hpp"
#include "cyclo/io.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/signed_graph.hpp"
#include "cyclo/spectrum.hpp"
#include "cyclo/sturm.hpp"
