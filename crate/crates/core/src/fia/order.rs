//! Column and row interleaving orders for banded syndrome matrices.

/// Column order on pairs `(ν, μ)` (sub-matrix `ν`, column `μ < N_ν`):
/// ascending `μ + ν·w` with `w = k − 1`, ties broken by smaller `ν`.
/// This is the `(1, k−1)`-weighted monomial order on `x^μ y^ν`.
#[derive(Debug, Clone)]
pub struct OrderH {
    weight: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
}

impl OrderH {
    pub fn new(bounds: &[usize], weight: usize) -> Self {
        let mut pairs: Vec<(usize, usize)> =
            bounds.iter().enumerate().flat_map(|(nu, &nt)| (0..nt).map(move |mu| (nu, mu))).collect();
        pairs.sort_by_key(|&(nu, mu)| (mu + nu * weight, nu));
        let mut index: Vec<Vec<usize>> = bounds.iter().map(|&nt| vec![0; nt]).collect();
        for (c, &(nu, mu)) in pairs.iter().enumerate() {
            index[nu][mu] = c;
        }
        OrderH { weight, pairs, index }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pair at column index `c`.
    pub fn pair(&self, c: usize) -> (usize, usize) {
        self.pairs[c]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Column index `C_(ν,μ)`: the number of pairs preceding `(ν, μ)`.
    pub fn index(&self, nu: usize, mu: usize) -> Option<usize> {
        self.index.get(nu)?.get(mu).copied()
    }

    pub fn next(&self, nu: usize, mu: usize) -> Option<(usize, usize)> {
        let c = self.index(nu, mu)?;
        self.pairs.get(c + 1).copied()
    }

    pub fn precedes(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        let key = |(nu, mu): (usize, usize)| (mu + nu * self.weight, nu);
        key(a) < key(b)
    }
}

/// Row order on pairs `(ϑ, κ)` (sub-band `ϑ < s`, row `κ < (s−ϑ)n`):
/// ascending `κ + ϑn`, ties broken by smaller `ϑ`.
#[derive(Debug, Clone)]
pub struct OrderV {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
}

impl OrderV {
    pub fn new(n: usize, s: usize) -> Self {
        let mut pairs: Vec<(usize, usize)> =
            (0..s).flat_map(|th| (0..(s - th) * n).map(move |ka| (th, ka))).collect();
        pairs.sort_by_key(|&(th, ka)| (ka + th * n, th));
        let mut index: Vec<Vec<usize>> = (0..s).map(|th| vec![0; (s - th) * n]).collect();
        for (r, &(th, ka)) in pairs.iter().enumerate() {
            index[th][ka] = r;
        }
        OrderV { n, pairs, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, r: usize) -> (usize, usize) {
        self.pairs[r]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Row index `R_(ϑ,κ)`.
    pub fn index(&self, theta: usize, kappa: usize) -> Option<usize> {
        self.index.get(theta)?.get(kappa).copied()
    }

    pub fn next(&self, theta: usize, kappa: usize) -> Option<(usize, usize)> {
        let r = self.index(theta, kappa)?;
        self.pairs.get(r + 1).copied()
    }

    pub fn prev(&self, theta: usize, kappa: usize) -> Option<(usize, usize)> {
        let r = self.index(theta, kappa)?;
        r.checked_sub(1).map(|p| self.pairs[p])
    }

    pub fn precedes(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        let key = |(th, ka): (usize, usize)| (ka + th * self.n, th);
        key(a) < key(b)
    }
}
