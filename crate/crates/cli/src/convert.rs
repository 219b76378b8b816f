//! Dense core objects from sparse documents and back.

use thiserror::Error;
use trihom::{
    BiTensor, BilinearForm, GaussRational, HomLie, LieRep, Matrix, PreLieRep, RepTensor, Scalar,
    ThreeHomLDend, ThreeHomLie, ThreeHomPreLie, TriTensor, Vector,
};

use crate::document::{Document, Kind, Mode};

#[derive(Debug, Error)]
pub enum ConvertError {
    #[error("expected a {expected} document, found {found}")]
    WrongKind { expected: String, found: Kind },
    #[error("expected a {expected}-mode document, found {found}")]
    WrongMode { expected: &'static str, found: &'static str },
    #[error(transparent)]
    Core(#[from] trihom::Error),
}

type Result<T> = std::result::Result<T, ConvertError>;

fn expect_kind(doc: &Document, kinds: &[Kind]) -> Result<()> {
    if kinds.contains(&doc.kind) {
        Ok(())
    } else {
        let names: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
        Err(ConvertError::WrongKind {
            expected: names.join(" or "),
            found: doc.kind,
        })
    }
}

fn expect_mode<S: Scalar>(doc: &Document) -> Result<()> {
    let want = Mode::of::<S>();
    if doc.mode == want {
        Ok(())
    } else {
        Err(ConvertError::WrongMode {
            expected: want.name(),
            found: doc.mode.name(),
        })
    }
}

fn scalar<S: Scalar>(z: &GaussRational) -> S {
    S::from_parts(z.re.clone(), z.im.clone()).expect("mode checked before conversion")
}

fn gauss<S: Scalar>(x: &S) -> GaussRational {
    GaussRational::new(x.re(), x.im())
}

fn entries<'a>(doc: &'a Document, name: &str) -> impl Iterator<Item = (&'a Vec<usize>, &'a GaussRational)> {
    doc.section(name).into_iter().flat_map(|s| s.iter())
}

fn tri<S: Scalar>(doc: &Document, name: &str) -> TriTensor<S> {
    let mut t = TriTensor::zeros(doc.dim);
    for (ix, v) in entries(doc, name) {
        t.set(ix[0], ix[1], ix[2], ix[3], scalar(v));
    }
    t
}

fn matrix<S: Scalar>(doc: &Document, name: &str, rows: usize, cols: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(rows, cols);
    for (ix, v) in entries(doc, name) {
        m[(ix[0], ix[1])] = scalar(v);
    }
    m
}

/// A twist section; absent means the identity.
fn twist<S: Scalar>(doc: &Document, name: &str, n: usize) -> Matrix<S> {
    match doc.section(name) {
        None => Matrix::identity(n),
        Some(_) => matrix(doc, name, n, n),
    }
}

fn rep_tensor<S: Scalar>(doc: &Document, name: &str, skew: bool) -> RepTensor<S> {
    let mut r = RepTensor::zeros(doc.dim, doc.module_dim(), skew);
    for (ix, v) in entries(doc, name) {
        r.get_mut(ix[0], ix[1])[(ix[2], ix[3])] = scalar(v);
    }
    r
}

pub fn hom_lie<S: Scalar>(doc: &Document) -> Result<HomLie<S>> {
    expect_kind(doc, &[Kind::HomLie])?;
    expect_mode::<S>(doc)?;
    let mut b = BiTensor::zeros(doc.dim);
    for (ix, v) in entries(doc, "bracket") {
        b.set(ix[0], ix[1], ix[2], scalar(v));
    }
    Ok(HomLie::new(b, twist(doc, "alpha", doc.dim))?)
}

pub fn lie<S: Scalar>(doc: &Document) -> Result<ThreeHomLie<S>> {
    expect_kind(doc, &[Kind::Lie])?;
    expect_mode::<S>(doc)?;
    Ok(ThreeHomLie::new(tri(doc, "bracket"), twist(doc, "alpha", doc.dim))?)
}

pub fn prelie<S: Scalar>(doc: &Document) -> Result<ThreeHomPreLie<S>> {
    expect_kind(doc, &[Kind::PreLie])?;
    expect_mode::<S>(doc)?;
    Ok(ThreeHomPreLie::new(tri(doc, "product"), twist(doc, "alpha", doc.dim))?)
}

pub fn ldend<S: Scalar>(doc: &Document) -> Result<ThreeHomLDend<S>> {
    expect_kind(doc, &[Kind::LDend])?;
    expect_mode::<S>(doc)?;
    Ok(ThreeHomLDend::new(tri(doc, "nw"), tri(doc, "ne"), twist(doc, "alpha", doc.dim))?)
}

pub fn linear_map<S: Scalar>(doc: &Document) -> Result<Matrix<S>> {
    expect_kind(doc, &[Kind::LinearMap])?;
    expect_mode::<S>(doc)?;
    Ok(matrix(doc, "map", doc.dim, doc.module_dim()))
}

pub fn lie_rep<S: Scalar>(doc: &Document) -> Result<LieRep<S>> {
    expect_kind(doc, &[Kind::Rep])?;
    expect_mode::<S>(doc)?;
    let alg = ThreeHomLie::new(tri(doc, "bracket"), twist(doc, "alpha", doc.dim))?;
    let phi = twist(doc, "phi", doc.module_dim());
    Ok(LieRep::new(alg, rep_tensor(doc, "rho", true), phi)?)
}

pub fn prelie_rep<S: Scalar>(doc: &Document) -> Result<PreLieRep<S>> {
    expect_kind(doc, &[Kind::PreLieRep])?;
    expect_mode::<S>(doc)?;
    let alg = ThreeHomPreLie::new(tri(doc, "product"), twist(doc, "alpha", doc.dim))?;
    let phi = twist(doc, "phi", doc.module_dim());
    Ok(PreLieRep::new(alg, rep_tensor(doc, "l", true), rep_tensor(doc, "r", false), phi)?)
}

pub fn bilinear_form<S: Scalar>(doc: &Document) -> Result<BilinearForm<S>> {
    expect_kind(doc, &[Kind::BilinearForm])?;
    expect_mode::<S>(doc)?;
    Ok(BilinearForm::new(matrix(doc, "form", doc.dim, doc.dim)))
}

pub fn covector<S: Scalar>(doc: &Document) -> Result<Vector<S>> {
    expect_kind(doc, &[Kind::Covector])?;
    expect_mode::<S>(doc)?;
    let mut v = vec![S::zero(); doc.dim];
    for (ix, x) in entries(doc, "covector") {
        v[ix[0]] = scalar(x);
    }
    Ok(v)
}

// ------------------------------------------------------------ back to text

fn blank<S: Scalar>(kind: Kind, dim: usize) -> Document {
    Document::new(kind, Mode::of::<S>(), dim)
}

fn put_tri<S: Scalar>(doc: &mut Document, name: &str, t: &TriTensor<S>) {
    doc.sections.entry(name.to_string()).or_default();
    for (ix, v) in t.entries() {
        doc.insert(name, ix.to_vec(), gauss(v));
    }
}

fn put_matrix<S: Scalar>(doc: &mut Document, name: &str, m: &Matrix<S>) {
    doc.sections.entry(name.to_string()).or_default();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            doc.insert(name, vec![r, c], gauss(&m[(r, c)]));
        }
    }
}

fn put_rep<S: Scalar>(doc: &mut Document, name: &str, t: &RepTensor<S>) {
    doc.sections.entry(name.to_string()).or_default();
    for i in 0..t.algdim() {
        for j in 0..t.algdim() {
            let m = t.get(i, j);
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    doc.insert(name, vec![i, j, r, c], gauss(&m[(r, c)]));
                }
            }
        }
    }
}

pub fn lie_doc<S: Scalar>(a: &ThreeHomLie<S>) -> Document {
    let mut d = blank::<S>(Kind::Lie, a.bracket.dim());
    put_tri(&mut d, "bracket", &a.bracket);
    put_matrix(&mut d, "alpha", &a.alpha);
    d
}

pub fn prelie_doc<S: Scalar>(a: &ThreeHomPreLie<S>) -> Document {
    let mut d = blank::<S>(Kind::PreLie, a.prod.dim());
    put_tri(&mut d, "product", &a.prod);
    put_matrix(&mut d, "alpha", &a.alpha);
    d
}

pub fn ldend_doc<S: Scalar>(a: &ThreeHomLDend<S>) -> Document {
    let mut d = blank::<S>(Kind::LDend, a.nw.dim());
    put_tri(&mut d, "nw", &a.nw);
    put_tri(&mut d, "ne", &a.ne);
    put_matrix(&mut d, "alpha", &a.alpha);
    d
}

pub fn map_doc<S: Scalar>(m: &Matrix<S>) -> Document {
    let mut d = blank::<S>(Kind::LinearMap, m.rows());
    if m.cols() != m.rows() {
        d.moddim = Some(m.cols());
    }
    put_matrix(&mut d, "map", m);
    d
}

pub fn lie_rep_doc<S: Scalar>(r: &LieRep<S>) -> Document {
    let mut d = blank::<S>(Kind::Rep, r.alg.bracket.dim());
    d.moddim = Some(r.moddim());
    put_tri(&mut d, "bracket", &r.alg.bracket);
    put_matrix(&mut d, "alpha", &r.alg.alpha);
    put_rep(&mut d, "rho", &r.rho);
    put_matrix(&mut d, "phi", &r.phi);
    d
}

pub fn prelie_rep_doc<S: Scalar>(r: &PreLieRep<S>) -> Document {
    let mut d = blank::<S>(Kind::PreLieRep, r.alg.prod.dim());
    d.moddim = Some(r.moddim());
    put_tri(&mut d, "product", &r.alg.prod);
    put_matrix(&mut d, "alpha", &r.alg.alpha);
    put_rep(&mut d, "l", &r.l);
    put_rep(&mut d, "r", &r.r);
    put_matrix(&mut d, "phi", &r.phi);
    d
}
