use std::fmt::Write;
use std::sync::Arc;

use eqorient::bredon::{bredon_cohomology, cochain_complex};
use eqorient::burnside::{BurnsideElement, BurnsideFunctor, UnitGroup};
use eqorient::group::{hom_classes, SubgroupTable};
use eqorient::mackey::{self, cyclic_formulas, tn_formulas, verify_mackey_axiom};
use eqorient::orientation::{
    augmentation_kernel_dim, classifying_pi0, gamma_rho_verdict, odd_order_collapse, w1_induced_line, Coefficient,
    InducedLine,
};
use eqorient::reps::{fiber_character, homogeneity_check, Character};
use eqorient::{Error, F2Matrix, Int, IntMatrix, Rational, Result};
use serde_json::{json, Value};

use crate::{input, Area, BredonCmd, BurnsideCmd, Cli, GroupCmd, MackeyCmd, OrientCmd, ProductArgs, RepCmd};

pub struct Output {
    pub text: String,
    pub json: Value,
}

fn output(text: String, mut json: Value) -> Output {
    json.as_object_mut().expect("object").insert("schema".into(), json!(1));
    Output { text, json }
}

fn int(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn ints(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<Value>> {
    m.to_rows().iter().map(|r| r.iter().map(int).collect()).collect()
}

fn f2_rows(m: &F2Matrix) -> Vec<Vec<u8>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.as_u8()).collect()).collect()
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn rows_text<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", list(r))).collect();
    format!("[{}]", rows.join(", "))
}

fn rational_values(c: &Character<Rational>) -> Vec<String> {
    c.values.iter().map(|v| v.to_string()).collect()
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.area {
        Area::Group(cmd) => group(cmd),
        Area::Burnside(cmd) => burnside(cmd),
        Area::Mackey(cmd) => mackey_cmd(cmd),
        Area::Rep(cmd) => rep(cmd),
        Area::Orient(cmd) => orient(cmd),
        Area::Bredon(cmd) => bredon(cmd),
    }
}

fn group(cmd: &GroupCmd) -> Result<Output> {
    match cmd {
        GroupCmd::Info(g) => {
            let table = input::table(&g.group)?;
            let grp = table.group();
            let gens: Vec<String> = grp.generators().iter().map(|p| p.to_string()).collect();
            let text = format!(
                "group: {}\norder: {}\ndegree: {}\nabelian: {}\ngenerators: {}\nsubgroups: {} in {} classes\n",
                g.group,
                grp.order(),
                grp.degree(),
                grp.is_abelian(),
                gens.join(", "),
                table.len(),
                table.class_count()
            );
            let json = json!({
                "group": g.group,
                "order": grp.order(),
                "degree": grp.degree(),
                "abelian": grp.is_abelian(),
                "generators": grp.to_spec().generators,
                "subgroups": table.len(),
                "classes": table.class_count(),
            });
            Ok(output(text, json))
        }
        GroupCmd::Subgroups(g) => {
            let table = input::table(&g.group)?;
            let mut text = format!("{} classes of subgroups\n", table.class_count());
            let mut classes = Vec::new();
            for (c, &r) in table.class_reps().iter().enumerate() {
                let sub = table.subgroup(r);
                let members = table.class_members(c);
                writeln!(
                    text,
                    "class {c}: H{r} order {} class size {} normalizer order {} elements [{}]",
                    sub.order(),
                    members.len(),
                    table.subgroup(table.normalizer(r)).order(),
                    list(sub.elements())
                )
                .unwrap();
                classes.push(json!({
                    "class": c,
                    "representative": r,
                    "order": sub.order(),
                    "members": members,
                    "normalizerOrder": table.subgroup(table.normalizer(r)).order(),
                    "elements": sub.elements(),
                }));
            }
            Ok(output(text, json!({ "count": table.class_count(), "classes": classes })))
        }
    }
}

fn element(functor: &BurnsideFunctor, level: usize, text: &str) -> Result<BurnsideElement> {
    BurnsideElement::from_coeffs(functor.ring(level), input::coefficients(text)?)
}

fn element_json(x: &BurnsideElement) -> Value {
    json!({
        "level": x.ring().level(),
        "coefficients": ints(x.coeffs()),
        "marks": ints(&x.mark_vector()),
        "text": x.to_string(),
    })
}

fn element_text(x: &BurnsideElement) -> String {
    format!("{x}\ncoefficients: [{}]\nmarks: [{}]\n", list(x.coeffs()), list(&x.mark_vector()))
}

fn burnside(cmd: &BurnsideCmd) -> Result<Output> {
    match cmd {
        BurnsideCmd::Tom { group, level } => {
            let table = input::table(&group.group)?;
            let level = input::subgroup(&table, *level)?;
            let f = BurnsideFunctor::new(table);
            let tom = f.ring(level).marks();
            let classes: Vec<String> = tom.classes().iter().map(|c| format!("H{c}")).collect();
            let mut text = format!("table of marks of A(H{level}); row i = orbit H/L_i, column j = fixed points of L_j\n");
            writeln!(text, "classes: {}", classes.join(" ")).unwrap();
            for (i, row) in tom.marks().to_rows().iter().enumerate() {
                writeln!(text, "{:>6}  {}", classes[i], list(row)).unwrap();
            }
            let json = json!({ "level": level, "classes": tom.classes(), "marks": int_rows(tom.marks()) });
            Ok(output(text, json))
        }
        BurnsideCmd::Mul { group, level, a, b } => {
            let table = input::table(&group.group)?;
            let level = input::subgroup(&table, *level)?;
            let f = BurnsideFunctor::new(table);
            let (x, y) = (element(&f, level, a)?, element(&f, level, b)?);
            let p = &x * &y;
            Ok(output(element_text(&p), json!({ "product": element_json(&p) })))
        }
        BurnsideCmd::Res { group, from, to, element: e } => {
            let table = input::table(&group.group)?;
            let from = input::subgroup(&table, *from)?;
            let to = input::subgroup(&table, Some(*to))?;
            let f = BurnsideFunctor::new(table);
            let r = f.restrict(&element(&f, from, e)?, to)?;
            Ok(output(element_text(&r), json!({ "restriction": element_json(&r) })))
        }
        BurnsideCmd::Tr { group, from, to, element: e } => {
            let table = input::table(&group.group)?;
            let from = input::subgroup(&table, Some(*from))?;
            let to = input::subgroup(&table, *to)?;
            let f = BurnsideFunctor::new(table);
            let r = f.transfer(&element(&f, from, e)?, to)?;
            Ok(output(element_text(&r), json!({ "transfer": element_json(&r) })))
        }
        BurnsideCmd::Norm { group, from, to, element: e } => {
            let table = input::table(&group.group)?;
            let from = input::subgroup(&table, Some(*from))?;
            let to = input::subgroup(&table, *to)?;
            let f = BurnsideFunctor::new(table);
            let r = f.norm(&element(&f, from, e)?, to)?;
            Ok(output(element_text(&r), json!({ "norm": element_json(&r) })))
        }
        BurnsideCmd::Units { group, level, list: all } => {
            let table = input::table(&group.group)?;
            let level = input::subgroup(&table, *level)?;
            let f = BurnsideFunctor::new(table);
            let units = UnitGroup::new(f.ring(level))?;
            let basis: Vec<String> = units.basis().iter().map(|u| u.to_string()).collect();
            let functional: Vec<u8> = units.augmentation_functional().iter().map(|x| x.as_u8()).collect();
            let kernel = units.kernel_basis().len();
            let mut text = format!(
                "dimension: {}\norder: {}\nindex-two dimension: {}\naugmentation kernel dimension: {kernel}\nbasis:\n",
                units.dim(),
                units.order(),
                units.matsuda_dim()
            );
            for b in &basis {
                writeln!(text, "  {b}").unwrap();
            }
            let mut json = json!({
                "level": level,
                "dimension": units.dim(),
                "order": units.order(),
                "indexTwoDimension": units.matsuda_dim(),
                "basis": basis,
                "augmentation": functional,
                "kernelDimension": kernel,
            });
            if *all {
                text.push_str("units:\n");
                for u in units.units() {
                    writeln!(text, "  {u}").unwrap();
                }
                json["units"] = Value::Array(units.units().iter().map(element_json).collect());
            }
            Ok(output(text, json))
        }
    }
}

fn mackey_cmd(cmd: &MackeyCmd) -> Result<Output> {
    match cmd {
        MackeyCmd::Show { group, coefficients } => {
            let table = input::table(&group.group)?;
            let m = mackey::by_name(coefficients, &table)?;
            let mut text = format!("{} over a group of order {}\n", m.name(), table.group().order());
            let mut levels = Vec::new();
            for &h in table.class_reps() {
                writeln!(text, "M(H{h}) = {}  generators: {}", m.level(h), list(m.labels(h))).unwrap();
                let mut maps = Vec::new();
                for k in table.subgroups_of(h) {
                    if k == h {
                        continue;
                    }
                    let (res, tr) = (m.res(k, h).expect("k ≤ h"), m.tr(k, h).expect("k ≤ h"));
                    writeln!(text, "  res H{h} -> H{k}: {}", rows_text(&res.to_rows())).unwrap();
                    writeln!(text, "  tr  H{k} -> H{h}: {}", rows_text(&tr.to_rows())).unwrap();
                    maps.push(json!({ "subgroup": k, "res": int_rows(res), "tr": int_rows(tr) }));
                }
                levels.push(json!({
                    "subgroup": h,
                    "value": m.level(h).to_string(),
                    "labels": m.labels(h),
                    "maps": maps,
                }));
            }
            Ok(output(text, json!({ "functor": m.name(), "levels": levels })))
        }
        MackeyCmd::Verify { group, coefficients } => {
            let table = input::table(&group.group)?;
            let m = mackey::by_name(coefficients, &table)?;
            let violations = verify_mackey_axiom(&m);
            match violations.first() {
                None => Ok(output(
                    format!("{}: all Mackey axioms hold\n", m.name()),
                    json!({ "functor": m.name(), "valid": true, "violations": [] }),
                )),
                Some(v) => Err(Error::Internal(format!(
                    "{}: {} axiom violations, first: {v}",
                    m.name(),
                    violations.len()
                ))),
            }
        }
        MackeyCmd::Tn { n, cyclic } => {
            let t = if *cyclic { cyclic_formulas(*n)? } else { tn_formulas(*n)? };
            let mut text = format!("{}: unit restriction and transfer agree with the closed forms\n", t.group);
            let mut entries = Vec::new();
            for e in &t.entries {
                writeln!(
                    text,
                    "H{} > H{}: res {}  tr {}",
                    e.big,
                    e.small,
                    rows_text(&f2_rows(&e.res)),
                    rows_text(&f2_rows(&e.tr))
                )
                .unwrap();
                entries.push(json!({ "big": e.big, "small": e.small, "res": f2_rows(&e.res), "tr": f2_rows(&e.tr) }));
            }
            Ok(output(text, json!({ "group": t.group, "entries": entries })))
        }
    }
}

fn rep(cmd: &RepCmd) -> Result<Output> {
    let load = |a: &ProductArgs| -> Result<_> {
        let group = input::group(&a.group.group)?;
        let structure = input::group(&a.structure)?;
        let v = input::product_rep(&a.rep, structure, group.clone())?;
        Ok((Arc::new(SubgroupTable::new(group)?), v))
    };
    match cmd {
        RepCmd::Homog(args) => {
            let (table, v) = load(args)?;
            let report = homogeneity_check(&v, &table)?;
            let mut text = format!("homogeneous: {}\n", report.homogeneous);
            let mut levels = Vec::new();
            for l in &report.levels {
                let chars: Vec<Vec<String>> = l.characters.iter().map(rational_values).collect();
                writeln!(text, "H{}: fiber characters {}", l.subgroup, rows_text(&chars)).unwrap();
                levels.push(json!({
                    "subgroup": l.subgroup,
                    "characters": chars,
                    "coordinate": l.coordinate.as_ref().map(rational_values),
                }));
            }
            Ok(output(text, json!({ "homogeneous": report.homogeneous, "levels": levels })))
        }
        RepCmd::Fiber { args, subgroup } => {
            let (table, v) = load(args)?;
            let s = input::subgroup(&table, *subgroup)?;
            let classes = hom_classes(table.group(), table.subgroup(s), v.structure());
            let mut text = String::new();
            let mut out = Vec::new();
            for (i, c) in classes.iter().enumerate() {
                let chi = fiber_character(&v, &c.representative);
                let classes_text: Vec<String> = chi.classes.iter().map(|k| format!("[{}]", list(k))).collect();
                writeln!(
                    text,
                    "theta {i} (class size {}): classes {} values [{}]",
                    c.size(),
                    classes_text.join(" "),
                    list(&rational_values(&chi))
                )
                .unwrap();
                out.push(json!({
                    "images": c.representative.images(),
                    "classSize": c.size(),
                    "conjugacyClasses": chi.classes,
                    "values": rational_values(&chi),
                }));
            }
            Ok(output(text, json!({ "subgroup": s, "fibers": out })))
        }
    }
}

fn orient(cmd: &OrientCmd) -> Result<Output> {
    match cmd {
        OrientCmd::GammaRho(g) => {
            let table = input::table(&g.group)?;
            let v = gamma_rho_verdict(&table)?;
            let coords: Vec<u8> = v.w1_a_coordinates.iter().map(|x| x.as_u8()).collect();
            let text = format!(
                "HZ-orientable: {}, HA-orientable: {}\nw1^Z: {}\nw1^A: {}\nw1^A coordinates: [{}]\nnote: {}\n",
                v.hz_orientable,
                v.ha_orientable,
                v.w1_z,
                v.w1_a,
                list(&coords),
                v.ghost_note
            );
            let json = json!({
                "hzOrientable": v.hz_orientable,
                "haOrientable": v.ha_orientable,
                "w1Z": v.w1_z.as_u8(),
                "w1A": element_json(&v.w1_a),
                "w1ACoordinates": coords,
                "note": v.ghost_note,
            });
            Ok(output(text, json))
        }
        OrientCmd::Pi0 { group, structure } => {
            let table = input::table(&group.group)?;
            let pi = input::group(structure)?;
            let d = classifying_pi0(&table, &pi);
            let mut text = String::new();
            let mut levels = Vec::new();
            for l in d.levels() {
                writeln!(text, "H{}: {} components", l.subgroup, l.components.len()).unwrap();
                let mut comps = Vec::new();
                for c in &l.components {
                    writeln!(
                        text,
                        "  theta {}  class size {}  |Z(theta)| = {}",
                        c.label, c.class_size, c.centralizer_order
                    )
                    .unwrap();
                    comps.push(json!({
                        "label": c.label,
                        "generatorImages": c.generator_images,
                        "classSize": c.class_size,
                        "centralizerOrder": c.centralizer_order,
                    }));
                }
                levels.push(json!({ "subgroup": l.subgroup, "components": comps }));
            }
            Ok(output(text, json!({ "levels": levels, "counts": d.component_counts() })))
        }
        OrientCmd::InducedLine(g) => {
            let table = input::table(&g.group)?;
            let InducedLine::Z(z) = w1_induced_line(&table, Coefficient::Z)? else {
                unreachable!()
            };
            let InducedLine::A(a) = w1_induced_line(&table, Coefficient::A)? else {
                unreachable!()
            };
            let text = format!(
                "w1^Z: {z} (HZ-orientable: {})\nw1^A: {a} (HA-orientable: {})\n",
                z.as_u8() == 0,
                a.is_one()
            );
            let json = json!({
                "w1Z": z.as_u8(),
                "w1A": element_json(&a),
                "hzOrientable": z.as_u8() == 0,
                "haOrientable": a.is_one(),
            });
            Ok(output(text, json))
        }
        OrientCmd::OddCollapse(g) => {
            let table = input::table(&g.group)?;
            let holds = odd_order_collapse(&table)?;
            let kernel = augmentation_kernel_dim(&table)?;
            let text = format!("augmentation isomorphism at every level: {holds}\ntop-level kernel dimension: {kernel}\n");
            Ok(output(text, json!({ "collapse": holds, "kernelDimension": kernel })))
        }
    }
}

fn bredon(cmd: &BredonCmd) -> Result<Output> {
    let BredonCmd::Compute { group, complex, coefficients } = cmd;
    let table = input::table(&group.group)?;
    let x = input::complex(complex, &table)?;
    let m = mackey::by_name(coefficients, &table)?;
    let cochains = cochain_complex(&x, &m)?;
    let h = bredon_cohomology(&x, &m)?;
    let mut text = String::new();
    for (n, p) in h.degrees.iter().enumerate() {
        writeln!(text, "H^{n} = {p}").unwrap();
    }
    writeln!(text, "cochain ranks: [{}]", list(&cochains.ranks)).unwrap();
    let degrees: Vec<Value> = h
        .degrees
        .iter()
        .map(|p| json!({ "freeRank": p.free_rank, "torsion": ints(&p.torsion), "text": p.to_string() }))
        .collect();
    Ok(output(
        text,
        json!({ "functor": m.name(), "cohomology": degrees, "cochainRanks": cochains.ranks }),
    ))
}
