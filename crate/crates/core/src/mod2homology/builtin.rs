use super::gf2::{BitVec, GF2Matrix};
use super::model::RealHomologyModel;
use super::HomologyError;

/// Names accepted by [`builtin_model`], with `conic_bundle(n)` for any `n >= 1`.
pub const BUILTIN_MODELS: [&str; 8] = [
    "conic_bundle(n)",
    "dp2",
    "dp1_S1",
    "dp1_S7",
    "dp1_N",
    "f0_hy",
    "f0_el",
    "cp2",
];

/// How `L` is specified: directly as a sum of ambient basis elements, or by
/// its intersection numbers with the ambient basis.
enum LSpec {
    Sum(Vec<String>),
    Meets(Vec<String>),
}

struct Builder {
    name: String,
    ambient: Vec<String>,
    ones: Vec<(String, String)>,
    l: LSpec,
    b1_l: usize,
    labels: Vec<(String, Vec<String>)>,
    tau: Vec<(String, Vec<String>)>,
    g: Vec<Vec<String>>,
    claimed: Vec<Vec<String>>,
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn s(i: usize) -> String {
    format!("S{i}")
}

impl Builder {
    fn new(name: impl Into<String>, ambient: Vec<String>) -> Self {
        Builder {
            name: name.into(),
            ambient,
            ones: Vec::new(),
            l: LSpec::Sum(Vec::new()),
            b1_l: 0,
            labels: Vec::new(),
            tau: Vec::new(),
            g: Vec::new(),
            claimed: Vec::new(),
        }
    }

    fn one(mut self, a: impl Into<String>, b: impl Into<String>) -> Self {
        self.ones.push((a.into(), b.into()));
        self
    }

    fn label(mut self, name: impl Into<String>, image: Vec<String>) -> Self {
        self.labels.push((name.into(), image));
        self
    }

    /// A label equal to the ambient basis element of the same name.
    fn plain(self, name: impl Into<String>) -> Self {
        let name = name.into();
        self.label(name.clone(), vec![name])
    }

    fn ambient_vector(&self, sum: &[String]) -> Result<BitVec, HomologyError> {
        let mut v = BitVec::zeros(self.ambient.len());
        for name in sum {
            let i = self.ambient.iter().position(|a| a == name).ok_or_else(|| {
                HomologyError::Consistency(format!("{}: unknown ambient class `{name}`", self.name))
            })?;
            v.flip(i);
        }
        Ok(v)
    }

    fn label_vector(&self, sum: &[String]) -> Result<BitVec, HomologyError> {
        let mut v = BitVec::zeros(self.labels.len());
        for name in sum {
            let i = self.labels.iter().position(|(l, _)| l == name).ok_or_else(|| {
                HomologyError::Consistency(format!("{}: unknown label `{name}`", self.name))
            })?;
            v.flip(i);
        }
        Ok(v)
    }

    fn build(self) -> Result<RealHomologyModel, HomologyError> {
        let a = self.ambient.len();
        let mut pairing = GF2Matrix::zeros(a, a);
        for (x, y) in &self.ones {
            let xi = self.ambient_vector(std::slice::from_ref(x))?.ones().next().expect("unit");
            let yi = self.ambient_vector(std::slice::from_ref(y))?.ones().next().expect("unit");
            pairing.set(xi, yi, true);
            pairing.set(yi, xi, true);
        }
        let l_class = match &self.l {
            LSpec::Sum(sum) => self.ambient_vector(sum)?,
            LSpec::Meets(profile) => {
                let target = self.ambient_vector(profile)?;
                pairing.solve(&target).ok_or_else(|| {
                    HomologyError::Consistency(format!("{}: no class has the pairings of L", self.name))
                })?
            }
        };
        let images = self
            .labels
            .iter()
            .map(|(_, image)| self.ambient_vector(image))
            .collect::<Result<Vec<_>, _>>()?;
        let n = self.labels.len();
        let mut columns: Vec<BitVec> = (0..n).map(|j| BitVec::unit(n, j)).collect();
        for (name, target) in &self.tau {
            let j = self.label_vector(std::slice::from_ref(name))?.ones().next().expect("unit");
            columns[j] = self.label_vector(target)?;
        }
        let g_generators = self
            .g
            .iter()
            .map(|v| self.label_vector(v))
            .collect::<Result<Vec<_>, _>>()?;
        let claimed_basis = self
            .claimed
            .iter()
            .map(|v| self.label_vector(v))
            .collect::<Result<Vec<_>, _>>()?;
        let model = RealHomologyModel {
            name: self.name,
            ambient_labels: self.ambient,
            ambient_pairing: pairing,
            l_class,
            b1_l: self.b1_l,
            labels: self.labels.into_iter().map(|(l, _)| l).collect(),
            images,
            tau: GF2Matrix::from_columns(n, &columns),
            g_generators,
            claimed_basis,
        };
        model.validate()?;
        Ok(model)
    }
}

/// Minimal conic bundle whose real part is `n` spheres, with `L = S1`.
pub fn conic_bundle(n: usize) -> Result<RealHomologyModel, HomologyError> {
    if n == 0 {
        return Err(HomologyError::UnknownModel("conic_bundle(0)".into()));
    }
    let mut ambient = names(&["c1", "B", "F", "E2"]);
    ambient.extend((2..2 * n).map(s));
    let mut b = Builder::new(format!("conic_bundle({n})"), ambient)
        .one("c1", "E2")
        .one("E2", "E2")
        .one("B", "F");
    for i in 2..2 * n - 1 {
        b = b.one(s(i), s(i + 1));
    }
    for i in [2, 3] {
        if i < 2 * n {
            b = b.one(s(i), "E2");
        }
    }
    // with a single sphere the cyclic labeling makes S3 = S1, which meets E2
    b.l = LSpec::Meets(if n == 1 { names(&["E2"]) } else { vec![s(2)] });
    b = b.plain("c1").plain("B").plain("F");
    if n >= 2 {
        b = b.plain("E2");
    }
    for i in 3..2 * n {
        b = b.plain(s(i));
    }
    let mut tau_b = names(&["B", "c1"]);
    if n % 2 == 1 {
        tau_b.push("F".into());
    }
    b.tau.push(("B".into(), tau_b));
    if n >= 2 {
        b.tau.push(("E2".into(), names(&["E2", "F"])));
    }
    b.g = vec![names(&["c1"]), names(&["F"])];
    b.claimed = (3..2 * n).map(|i| vec![s(i)]).collect();
    b.build()
}

/// Minimal real del Pezzo surface of degree 2 with four spheres, `L = S1`.
pub fn dp2() -> Result<RealHomologyModel, HomologyError> {
    let mut ambient = names(&["c1", "E"]);
    ambient.extend((2..=7).map(s));
    let mut b = Builder::new("dp2", ambient)
        .one("c1", "E")
        .one("E", "E")
        .one("E", "S2");
    for i in 2..7 {
        b = b.one(s(i), s(i + 1));
    }
    b.l = LSpec::Meets(vec![s(2)]);
    b = b.plain("c1").plain("E");
    for i in 3..=7 {
        b = b.plain(s(i));
    }
    b.tau.push(("E".into(), names(&["E", "c1"])));
    b.g = vec![names(&["c1"])];
    b.claimed = (3..=7).map(|i| vec![s(i)]).collect();
    b.build()
}

fn dp1_base(name: &str) -> Builder {
    let mut ambient = names(&["c1"]);
    ambient.extend((1..=8).map(s));
    let mut b = Builder::new(name, ambient).one("c1", "c1").one("S8", "S1");
    for i in 1..7 {
        b = b.one(s(i), s(i + 1));
    }
    b
}

fn dp1_n_class() -> Vec<String> {
    names(&["c1", "S1", "S3", "S5", "S7"])
}

fn dp1_s9_class() -> Vec<String> {
    names(&["S8", "S2", "S4"])
}

/// Minimal real del Pezzo surface of degree 1, real part four spheres and a
/// projective plane `N`, with `L` one of `S1`, `S7`, `N`.
pub fn dp1(component: &str) -> Result<RealHomologyModel, HomologyError> {
    let mut b = dp1_base(&format!("dp1_{component}"));
    match component {
        "S1" => {
            b.l = LSpec::Sum(vec![s(1)]);
            b = b.plain("c1");
            for i in 3..=7 {
                b = b.plain(s(i));
            }
            b = b.label("S9", dp1_s9_class()).label("N", dp1_n_class());
            b.g = vec![names(&["c1"])];
            b.claimed = (3..=7).map(|i| vec![s(i)]).collect();
            b.claimed.push(names(&["S9"]));
            b.claimed.push(names(&["N"]));
        }
        "S7" => {
            b.l = LSpec::Sum(vec![s(7)]);
            b = b.plain("c1");
            for i in 1..=5 {
                b = b.plain(s(i));
            }
            b = b.plain("S8").label("N", dp1_n_class());
            b.g = vec![names(&["c1"])];
            b.claimed = (1..=5).map(|i| vec![s(i)]).collect();
            b.claimed.push(names(&["S8"]));
            b.claimed.push(names(&["N"]));
        }
        "N" => {
            b.l = LSpec::Sum(dp1_n_class());
            b.b1_l = 1;
            // E is the (-1)-curve over a tritangent section; K spans the kernel
            b = b.label("K", Vec::new()).label("E", names(&["c1", "S1", "S8"]));
            for i in 1..=7 {
                b = b.plain(s(i));
            }
            b.tau.push(("E".into(), names(&["E", "K"])));
            b.g = vec![names(&["K"])];
            b.claimed = (1..=7).map(|i| vec![s(i)]).collect();
        }
        other => return Err(HomologyError::UnknownModel(format!("dp1_{other}"))),
    }
    b.build()
}

/// The hyperboloid: `L` is the torus, of class zero.
pub fn f0_hy() -> Result<RealHomologyModel, HomologyError> {
    let mut b = Builder::new("f0_hy", names(&["l1", "l2"])).one("l1", "l2");
    b.l = LSpec::Sum(Vec::new());
    b.b1_l = 2;
    b = b
        .label("l1~", names(&["l1"]))
        .label("l2~", names(&["l2"]))
        .label("K1", Vec::new())
        .label("K2", Vec::new());
    b.tau.push(("l1~".into(), names(&["l1~", "K1"])));
    b.tau.push(("l2~".into(), names(&["l2~", "K2"])));
    b.g = vec![names(&["K1"]), names(&["K2"])];
    b.build()
}

/// The ellipsoid: `L` is the sphere, of class `l1 + l2`.
pub fn f0_el() -> Result<RealHomologyModel, HomologyError> {
    let mut b = Builder::new("f0_el", names(&["l1", "l2"])).one("l1", "l2");
    b.l = LSpec::Sum(names(&["l1", "l2"]));
    // a real plane section avoiding the real sphere
    b = b.label("Q", names(&["l1", "l2"]));
    b.g = vec![names(&["Q"])];
    b.build()
}

/// The projective plane with `L = RP2`.
pub fn cp2() -> Result<RealHomologyModel, HomologyError> {
    let mut b = Builder::new("cp2", names(&["line"])).one("line", "line");
    b.l = LSpec::Sum(names(&["line"]));
    b.b1_l = 1;
    b = b.label("K", Vec::new());
    b.g = vec![names(&["K"])];
    b.build()
}

/// Looks up a built-in model by name, e.g. `dp2` or `conic_bundle(3)`.
pub fn builtin_model(name: &str) -> Result<RealHomologyModel, HomologyError> {
    let unknown = || HomologyError::UnknownModel(name.to_string());
    if let Some(rest) = name.strip_prefix("conic_bundle") {
        let n = rest
            .trim_start_matches(['(', ':', '_'])
            .trim_end_matches(')')
            .parse::<usize>()
            .map_err(|_| unknown())?;
        return conic_bundle(n);
    }
    match name {
        "dp2" => dp2(),
        "dp1_S1" => dp1("S1"),
        "dp1_S7" => dp1("S7"),
        "dp1_N" => dp1("N"),
        "f0_hy" => f0_hy(),
        "f0_el" => f0_el(),
        "cp2" => cp2(),
        _ => Err(unknown()),
    }
}
