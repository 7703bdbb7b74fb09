#pragma once
#include <string>
#include <vector>

#include "vn/cuntz.hpp"
#include "vn/intervals.hpp"
#include "vn/plmaps.hpp"
#include "vn/representation.hpp"
#include "vn/tables.hpp"

namespace vn {

std::string table_to_json(const Table& t);
Table table_from_json(const std::string& text);

std::string interval_to_json(const NadicInterval& iv);
NadicInterval interval_from_json(const std::string& text);

std::string plmap_to_json(const PLMap& m);
PLMap plmap_from_json(const std::string& text);

std::string sum_to_json(const CuntzSum& s);
CuntzSum sum_from_json(const std::string& text);

std::string matrix_to_json(const MatrixSection& m);

std::string points_to_json(const std::vector<Rational>& pts);

}  // namespace vn
