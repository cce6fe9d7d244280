#pragma once

#include "json.hpp"
#include "tgw/geometry.hpp"
#include "tgw/homology.hpp"
#include "tgw/ideals.hpp"
#include "tgw/module.hpp"
#include "tgw/module_theory.hpp"
#include "tgw/semiring.hpp"

namespace tgw {

using Json = nlohmann::ordered_json;

const char* flag_name(Flag f);

Json to_json(const Semiring& s, const AxiomReport& r);
Json to_json(const Semiring& s, const IdealSet& i);
Json to_json(const Semiring& s, const SpectrumSpace& spec, const ZariskiReport& z);
Json to_json(const MonoidPresentation& p);
Json to_json(const GammaModule& m, const DensityReport& d);
Json to_json(const GammaModule& m, const EndReport& e);
Json to_json(const GammaModule& m, const FreeResolution& r);
Json to_json(const ExtReport& e);
Json to_json(const TorReport& t);
Json to_json(const AdjunctionReport& a);
Json to_json(const Semiring& s, const RadicalReport& r);
Json to_json(const SemisimplicityReport& r);
Json to_json(const Semiring& s, const LocalizedSemiring& l);
Json to_json(const Semiring& s, const GelfandReport& g);
Json to_json(const IsoInstance& i);
Json catalog_json(const std::vector<CatalogEntry>& catalog, const Options& opt);
Json module_summary(const GammaModule& m, const Options& opt);

}  // namespace tgw
