#include "qbundle/presets.hpp"

#include <cstdlib>

namespace qb {

std::string_view suq2_text() {
  return R"(algebra suq2
  generators alpha alpha* gamma gamma*
  weight alpha 1
  weight alpha* 1
  rel alpha gamma = q gamma alpha
  rel alpha gamma* = q gamma* alpha
  rel gamma gamma* = gamma* gamma
  rel alpha* alpha + gamma* gamma = 1
  rel alpha alpha* + q^2 gamma gamma* = 1
  rel gamma alpha* = q alpha* gamma
  rel gamma* alpha* = q alpha* gamma*
  coproduct alpha = alpha (x) alpha - q gamma* (x) gamma
  coproduct gamma = gamma (x) alpha + alpha* (x) gamma
  coproduct gamma* = alpha (x) gamma* + gamma* (x) alpha*
  coproduct alpha* = -q gamma (x) gamma* + alpha* (x) alpha*
  counit alpha = 1
  counit gamma = 0
  counit gamma* = 0
  counit alpha* = 1
  antipode alpha = alpha*
  antipode gamma = -q gamma
  antipode gamma* = -q^-1 gamma*
  antipode alpha* = alpha
  antipode_inv alpha = alpha*
  antipode_inv gamma = -q^-1 gamma
  antipode_inv gamma* = -q gamma*
  antipode_inv alpha* = alpha
)";
}

std::string_view u1_text() {
  return R"(algebra u1
  generators u u*
  rel u u* = 1
  rel u* u = 1
  coproduct u = u (x) u
  coproduct u* = u* (x) u*
  counit u = 1
  counit u* = 1
  antipode u = u*
  antipode u* = u
  antipode_inv u = u*
  antipode_inv u* = u
)";
}

std::string hopf_fibration_text() {
  std::string s(suq2_text());
  s += u1_text();
  s += R"(coaction hopf : suq2 -> suq2 (x) u1
  delta alpha = alpha (x) u
  delta gamma = gamma (x) u
coaction u1_regular : u1 -> u1 (x) u1
  delta u = u (x) u
morphism f : suq2 -> u1
  map alpha = u
  map gamma = 0
)";
  return s;
}

Document preset_document(const std::string& name) {
  Document doc;
  if (name == "suq2") load_text(doc, suq2_text());
  else if (name == "u1") load_text(doc, u1_text());
  else throw PreconditionError("unknown preset '" + name + "'");
  return doc;
}

Bundle podles_line(int n, int coverage) {
  if (n == 0) throw PreconditionError("podles-line needs n != 0");
  Bundle b;
  std::string text = hopf_fibration_text();
  const std::string power = (n > 0 ? "u^" : "u*^") + std::to_string(std::abs(n));
  text += "corep line dim 1 on u1\n  row " + power + "\n";
  load_text(b.doc, text);
  b.coaction = b.doc.coaction("hopf");
  b.connection = u1_power_connection(b.coaction, n, coverage);
  b.doc.connections["u1_power"] = b.connection;
  b.doc.connection_order.push_back("u1_power");
  b.corep = b.doc.corep("line");
  b.morphism = b.doc.morphism("f");
  verify_morphism(*b.morphism);
  b.target = b.doc.coaction("u1_regular");
  return b;
}

Bundle trivial_base(const std::string& corep) {
  Bundle b;
  load_text(b.doc, suq2_text());
  load_text(b.doc, R"(corep u dim 2 on suq2
  row alpha, -q gamma*
  row gamma, alpha*
corep trivial dim 1 on suq2
  row 1
)");
  const HopfPtr H = b.doc.hopf_of("suq2");
  b.coaction = regular_coaction(H);
  b.doc.coactions["regular"] = b.coaction;
  b.doc.coaction_order.push_back("regular");
  Corepresentation dual = contragredient(b.doc.corep("u"));
  dual.name = "u-dual";
  b.doc.coreps["u-dual"] = dual;
  b.doc.corep_order.push_back("u-dual");
  b.corep = b.doc.corep(corep);
  b.connection = trivial_connection(b.coaction, corep_span(b.doc.corep("u")));
  b.doc.connections["trivial"] = b.connection;
  b.doc.connection_order.push_back("trivial");
  return b;
}

}  // namespace qb
