#pragma once

#include "cyclo/errors.hpp"
#include "cyclo/galois.hpp"
#include "cyclo/modring.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/spectral.hpp"
#include "cyclo/codes.hpp"
#include "cyclo/bounds.hpp"
#include "cyclo/wtdist.hpp"
#include "cyclo/forge.hpp"
