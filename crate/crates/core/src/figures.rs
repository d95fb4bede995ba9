//! Explicit colourings drawn in the literature for each family, transcribed
//! onto the vertex layout of [`crate::families`]. Each drawing lists the
//! colour of rim vertex `v_i`, outer vertex `u_i` and the centre.

use crate::chroma::ColourAssignment;
use crate::families::{Family, FamilySpec};

#[derive(Debug, Clone)]
pub struct FigureColouring {
    pub spec: FamilySpec,
    pub caption: &'static str,
    pub colouring: ColourAssignment,
}

fn alternate(a: u32, b: u32, len: usize) -> Vec<u32> {
    (0..len).map(|i| if i % 2 == 0 { a } else { b }).collect()
}

fn with(mut base: Vec<u32>, tail: &[u32]) -> Vec<u32> {
    base.extend_from_slice(tail);
    base
}

fn figure(
    family: Family,
    caption: &'static str,
    rim: Vec<u32>,
    outer: Vec<u32>,
    centre: Option<u32>,
) -> FigureColouring {
    let n = rim.len();
    let colours: Vec<u32> = rim.into_iter().chain(outer).chain(centre).collect();
    FigureColouring {
        spec: FamilySpec { family, n },
        caption,
        colouring: ColourAssignment::new(colours).expect("figure colours are contiguous"),
    }
}

/// Every drawn colouring, in the order the drawings appear.
pub fn figure_colourings() -> Vec<FigureColouring> {
    // Shared pieces of the odd-order drawings.
    let rim9 = with(alternate(1, 2, 8), &[3]);
    let outer9 = with(vec![3], &alternate(1, 2, 8));
    let csf_rim9 = with(alternate(3, 4, 8), &[1]);
    let csf_outer9 = with(vec![4], &alternate(1, 2, 8));

    vec![
        figure(Family::Wheel, "wheel, rim 10", alternate(1, 2, 10), vec![], Some(3)),
        figure(Family::Wheel, "wheel, rim 9", rim9.clone(), vec![], Some(4)),
        figure(Family::DoubleWheel, "double wheel, n = 9", rim9.clone(), rim9.clone(), Some(4)),
        figure(Family::Helm, "helm, n = 8", alternate(2, 3, 8), vec![1; 8], Some(1)),
        figure(Family::Helm, "helm, n = 9", with(alternate(2, 3, 8), &[4]), vec![1; 9], Some(1)),
        figure(Family::ClosedHelm, "closed helm, n = 8", alternate(1, 2, 8), alternate(2, 1, 8), Some(3)),
        figure(Family::ClosedHelm, "closed helm, n = 9", rim9.clone(), outer9.clone(), Some(4)),
        figure(Family::Flower, "flower, n = 8", alternate(2, 3, 8), vec![1; 8], Some(4)),
        figure(Family::Flower, "flower, n = 9", with(alternate(2, 3, 8), &[4]), vec![1; 9], Some(5)),
        figure(Family::Djembe, "djembe, n = 9", rim9, outer9, Some(4)),
        figure(Family::Djembe, "djembe, n = 8", alternate(1, 2, 8), alternate(2, 1, 8), Some(3)),
        figure(Family::Sunflower, "sunflower, n = 8", alternate(2, 3, 8), vec![1; 8], Some(1)),
        figure(Family::Sunflower, "sunflower, n = 9", with(alternate(2, 3, 8), &[4]), vec![1; 9], Some(1)),
        figure(Family::ClosedSunflower, "closed sunflower, n = 9", csf_rim9.clone(), csf_outer9.clone(), Some(2)),
        figure(Family::ClosedSunflower, "closed sunflower, n = 10", alternate(3, 4, 10), alternate(1, 2, 10), Some(1)),
        figure(Family::Antiprism, "antiprism, n = 9", csf_rim9.clone(), csf_outer9.clone(), None),
        figure(Family::Antiprism, "antiprism, n = 10", alternate(3, 4, 10), alternate(1, 2, 10), None),
        figure(Family::Blossom, "blossom, n = 9", csf_rim9, csf_outer9, Some(5)),
        figure(Family::Blossom, "blossom, n = 10", alternate(3, 4, 10), alternate(1, 2, 10), Some(5)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::vertex_layout;

    #[test]
    fn sizes_match_layouts() {
        for fig in figure_colourings() {
            let layout = vertex_layout(fig.spec).unwrap();
            assert_eq!(fig.colouring.len(), layout.total(), "{}", fig.caption);
        }
    }

    #[test]
    fn helm_8_matches_drawing() {
        let figs = figure_colourings();
        let helm = figs.iter().find(|f| f.caption == "helm, n = 8").unwrap();
        assert_eq!(
            helm.colouring.colours(),
            &[2, 3, 2, 3, 2, 3, 2, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1]
        );
    }
}
