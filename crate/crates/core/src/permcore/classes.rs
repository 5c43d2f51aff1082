use super::group::PermGroup;

/// Conjugacy classes of a group, ordered by least element index
/// (so the identity class is always class 0).
#[derive(Debug, Clone)]
pub struct ClassData {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub element_orders: Vec<usize>,
    class_of: Vec<usize>,
    power_classes: Vec<Vec<usize>>,
    group_order: usize,
}

impl ClassData {
    pub fn new(group: &PermGroup) -> Self {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for g in 0..n {
                let y = group.conjugate(g, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let class_sizes = classes.iter().map(Vec::len).collect();
        let element_orders: Vec<usize> = representatives
            .iter()
            .map(|&r| group.element_order(r))
            .collect();
        let power_classes: Vec<Vec<usize>> = representatives
            .iter()
            .map(|&r| {
                let mut out = Vec::with_capacity(group.element_order(r));
                let mut x = 0;
                for _ in 0..group.element_order(r) {
                    out.push(class_of[x]);
                    x = group.mul(x, r);
                }
                out
            })
            .collect();
        let inverse_class = representatives
            .iter()
            .map(|&r| class_of[group.inv(r)])
            .collect();
        Self {
            classes,
            representatives,
            class_sizes,
            inverse_class,
            element_orders,
            class_of,
            power_classes,
            group_order: n,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class of `rep_i^t`; `t` may be negative.
    pub fn power_class(&self, i: usize, t: i64) -> usize {
        let powers = &self.power_classes[i];
        powers[t.rem_euclid(powers.len() as i64) as usize]
    }

    pub fn centralizer_order(&self, i: usize) -> usize {
        self.group_order / self.class_sizes[i]
    }

    /// Element set of a union of classes, sorted.
    pub fn union_elements(&self, class_ids: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = class_ids
            .iter()
            .flat_map(|&c| self.classes[c].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Classes wholly contained in an element set (which is assumed to be a
    /// union of classes).
    pub fn classes_in(&self, elements: &[usize]) -> Vec<usize> {
        let mut ids: Vec<usize> = elements.iter().map(|&e| self.class_of[e]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

pub fn conjugacy_classes(group: &PermGroup) -> ClassData {
    ClassData::new(group)
}
